#include <iostream>

int main() {
    std::cout << "epsalg: placeholder\n";
    return 0;
}
