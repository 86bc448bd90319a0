#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "epsalg/error.hpp"

namespace epsalg {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational from a numerator/denominator pair (mpq_class does not
/// canonicalize on construction).
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace detail {

/// Monic integer polynomials, coefficient vectors with c[k] the x^k coefficient.
using IPoly = std::vector<Int>;

/// Exact division a / b of integer polynomials; b monic, remainder must vanish.
inline IPoly ipoly_div_exact(IPoly a, const IPoly& b) {
    const size_t db = b.size() - 1;
    if (a.size() - 1 < db) fail_validation("ipoly_div_exact: degree underflow");
    IPoly q(a.size() - db, 0);
    for (size_t k = a.size(); k-- > db;) {
        Int c = a[k];
        if (c == 0) continue;
        q[k - db] = c;
        for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    for (const Int& c : a)
        if (c != 0) fail_validation("ipoly_div_exact: nonzero remainder");
    return q;
}

/// N-th cyclotomic polynomial Phi_N, computed by dividing x^N - 1 by all
/// lower Phi_d with d | N. Results are cached per conductor.
inline IPoly cyclotomic_ipoly(int n) {
    static std::map<int, IPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // phi_1 = x - 1; recursion is shallow so compute iteratively from divisors.
    std::function<IPoly(int)> compute = [&](int m) -> IPoly {
        if (auto it = cache.find(m); it != cache.end()) return it->second;
        IPoly num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        IPoly acc = num;
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            acc = ipoly_div_exact(acc, compute(d));
        }
        cache[m] = acc;
        return acc;
    };
    return compute(n);
}

/// Precomputed data for arithmetic in Q(zeta_N) = Q[x] / Phi_N.
struct CycTable {
    int n = 0;                              ///< conductor
    int deg = 0;                            ///< deg Phi_N = phi(N)
    std::vector<Rat> phi;                   ///< monic Phi_N coefficients, size deg+1
    std::vector<std::vector<Rat>> zeta_pow; ///< reduced representative of zeta^m, m in [0, N)
};

inline const CycTable& cyc_table(int n) {
    static std::map<int, CycTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CycTable t;
    t.n = n;
    IPoly ip = cyclotomic_ipoly(n);
    t.deg = static_cast<int>(ip.size()) - 1;
    t.phi.assign(ip.begin(), ip.end());

    // zeta^m mod Phi_N for every exponent class.
    std::vector<Rat> cur(t.deg, 0);
    cur[0] = 1;
    for (int m = 0; m < n; ++m) {
        t.zeta_pow.push_back(cur);
        // multiply by zeta and reduce
        std::vector<Rat> nxt(t.deg + 1, 0);
        for (int k = 0; k < t.deg; ++k) nxt[k + 1] = cur[k];
        if (nxt[t.deg] != 0) {
            Rat c = nxt[t.deg];
            for (int j = 0; j <= t.deg; ++j) nxt[j] -= c * t.phi[j];
        }
        nxt.resize(t.deg);
        cur = std::move(nxt);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace detail

/// An element of the cyclotomic field Q(zeta_N), stored as a reduced
/// polynomial in zeta modulo Phi_N. Conductor N = 1 is plain Q and mixes
/// freely with any other conductor; two conductors > 1 never mix.
///
/// All arithmetic is exact field arithmetic. Values are immutable in the
/// sense that every operation returns a fresh value.
class CycNum {
public:
    CycNum() : m_n(1), m_c(1, Rat(0)) {}
    CycNum(int v) : m_n(1), m_c(1, Rat(v)) {}
    CycNum(long v) : m_n(1), m_c(1, Rat(v)) {}
    CycNum(const Rat& v) : m_n(1), m_c(1, v) {}

    static CycNum rational(const Rat& v) { return CycNum(v); }

    /// zeta_N^k, reduced.
    static CycNum zeta(int n, long k = 1) {
        if (n < 1) fail_conductor("conductor must be >= 1");
        const auto& t = detail::cyc_table(n);
        long m = ((k % n) + n) % n;
        CycNum r;
        r.m_n = n;
        r.m_c = t.zeta_pow[static_cast<size_t>(m)];
        return r;
    }

    /// Primitive root of unity of the given order inside Q(zeta_N);
    /// the order has to divide the conductor.
    static CycNum root_of_unity(int n, long order) {
        if (order < 1 || n % order != 0)
            fail_conductor("root of unity of order " + std::to_string(order) +
                           " is not representable at conductor " + std::to_string(n));
        return zeta(n, n / order);
    }

    static CycNum imaginary_unit(int n) { return root_of_unity(n, 4); }

    int conductor() const { return m_n; }

    bool is_zero() const {
        for (const Rat& c : m_c)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (m_c[0] != 1) return false;
        for (size_t k = 1; k < m_c.size(); ++k)
            if (m_c[k] != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t k = 1; k < m_c.size(); ++k)
            if (m_c[k] != 0) return false;
        return true;
    }
    /// The rational value; only valid when is_rational().
    const Rat& rat() const {
        if (!is_rational()) fail_validation("CycNum: not a rational value");
        return m_c[0];
    }

    const std::vector<Rat>& coeffs() const { return m_c; }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        auto [x, y] = align(a, b);
        for (size_t k = 0; k < x.m_c.size(); ++k) x.m_c[k] += y.m_c[k];
        return x;
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        auto [x, y] = align(a, b);
        for (size_t k = 0; k < x.m_c.size(); ++k) x.m_c[k] -= y.m_c[k];
        return x;
    }
    CycNum operator-() const {
        CycNum r = *this;
        for (Rat& c : r.m_c) c = -c;
        return r;
    }
    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        // fast paths: rational scaling avoids the convolution entirely
        if (a.is_rational()) return scaled(b.promote_to(std::max(a.m_n, b.m_n)), a.m_c[0]);
        if (b.is_rational()) return scaled(a, b.m_c[0]);
        auto [x, y] = align(a, b);
        const auto& t = detail::cyc_table(x.m_n);
        std::vector<Rat> conv(2 * t.deg - 1, Rat(0));
        for (int i = 0; i < t.deg; ++i) {
            if (x.m_c[i] == 0) continue;
            for (int j = 0; j < t.deg; ++j) {
                if (y.m_c[j] == 0) continue;
                conv[i + j] += x.m_c[i] * y.m_c[j];
            }
        }
        reduce(conv, t);
        x.m_c = std::move(conv);
        return x;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x];
    /// Phi_N is irreducible so every nonzero element is invertible.
    CycNum inverse() const {
        if (is_zero()) fail_validation("CycNum: division by zero");
        if (is_rational()) {
            CycNum r = *this;
            r.m_c[0] = 1 / r.m_c[0];
            return r;
        }
        const auto& t = detail::cyc_table(m_n);
        // extended gcd of (this, Phi): u*this + v*Phi = 1
        std::vector<Rat> r0 = t.phi, r1 = m_c;
        trim(r1);
        std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};
        while (true) {
            // r0 = q*r1 + r2
            std::vector<Rat> q, r2 = r0;
            long dr1 = static_cast<long>(r1.size()) - 1;
            q.assign(std::max<long>(static_cast<long>(r2.size()) - dr1, 1), Rat(0));
            for (long k = static_cast<long>(r2.size()) - 1; k >= dr1; --k) {
                if (r2[static_cast<size_t>(k)] == 0) continue;
                Rat c = r2[static_cast<size_t>(k)] / r1[static_cast<size_t>(dr1)];
                q[static_cast<size_t>(k - dr1)] = c;
                for (long j = 0; j <= dr1; ++j) r2[static_cast<size_t>(k - dr1 + j)] -= c * r1[static_cast<size_t>(j)];
            }
            trim(r2);
            // u2 = u0 - q*u1
            std::vector<Rat> u2 = u0;
            u2.resize(std::max(u0.size(), q.size() + u1.size() - 1), Rat(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
            }
            trim(u2);
            if (r2.size() == 1 && r2[0] == 0) {
                // r1 is the gcd, a nonzero constant since Phi_N is irreducible
                Rat g = r1[0];
                if (r1.size() != 1) fail_validation("CycNum: inverse of a zero divisor");
                std::vector<Rat> inv(static_cast<size_t>(t.deg), Rat(0));
                for (size_t k = 0; k < u1.size() && k < inv.size(); ++k) inv[k] = u1[k] / g;
                CycNum r = *this;
                r.m_c = std::move(inv);
                return r;
            }
            r0 = std::move(r1);
            r1 = std::move(r2);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum acc(Rat(1));
        CycNum base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Complex conjugation: the field automorphism zeta -> zeta^(N-1).
    CycNum conj() const {
        if (m_n == 1) return *this;
        const auto& t = detail::cyc_table(m_n);
        std::vector<Rat> out(static_cast<size_t>(t.deg), Rat(0));
        for (int k = 0; k < t.deg; ++k) {
            if (m_c[static_cast<size_t>(k)] == 0) continue;
            const auto& rep = t.zeta_pow[static_cast<size_t>((m_n - k) % m_n)];
            for (int j = 0; j < t.deg; ++j) out[static_cast<size_t>(j)] += m_c[static_cast<size_t>(k)] * rep[static_cast<size_t>(j)];
        }
        CycNum r = *this;
        r.m_c = std::move(out);
        return r;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        auto [x, y] = align(a, b);
        return x.m_c == y.m_c;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Canonical literal form, e.g. "3/2", "-1", "zeta^1@4", "1/2 - 1/2*zeta^2@12".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (size_t k = 0; k < m_c.size(); ++k) {
            const Rat& c = m_c[k];
            if (c == 0) continue;
            Rat a = c;
            bool neg = a < 0;
            if (neg) a = -a;
            std::string coeff = a.get_str();
            std::string term;
            if (k == 0) {
                term = coeff;
            } else {
                std::string zp = "zeta^" + std::to_string(k) + "@" + std::to_string(m_n);
                term = (coeff == "1") ? zp : coeff + "*" + zp;
            }
            if (first) {
                out = (neg ? "-" : "") + term;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + term;
            }
        }
        return out;
    }

private:
    int m_n;
    std::vector<Rat> m_c;  // size deg Phi_N, reduced representative

    static void trim(std::vector<Rat>& p) {
        while (p.size() > 1 && p.back() == 0) p.pop_back();
    }

    static void reduce(std::vector<Rat>& conv, const detail::CycTable& t) {
        for (size_t k = conv.size(); k-- > static_cast<size_t>(t.deg);) {
            if (conv[k] == 0) continue;
            Rat c = conv[k];
            conv[k] = 0;
            for (int j = 0; j < t.deg; ++j) conv[k - static_cast<size_t>(t.deg) + static_cast<size_t>(j)] += c * Rat(-t.phi[static_cast<size_t>(j)]);
        }
        conv.resize(static_cast<size_t>(t.deg));
    }

    CycNum promote_to(int n) const {
        if (m_n == n) return *this;
        if (m_n != 1) fail_conductor("mixing conductors " + std::to_string(m_n) + " and " + std::to_string(n));
        CycNum r;
        r.m_n = n;
        r.m_c.assign(static_cast<size_t>(detail::cyc_table(n).deg), Rat(0));
        r.m_c[0] = m_c[0];
        return r;
    }

    static CycNum scaled(CycNum a, const Rat& s) {
        for (Rat& c : a.m_c) c *= s;
        return a;
    }

    static std::pair<CycNum, CycNum> align(const CycNum& a, const CycNum& b) {
        if (a.m_n == b.m_n) return {a, b};
        if (a.m_n == 1) return {a.promote_to(b.m_n), b};
        if (b.m_n == 1) return {a, b.promote_to(a.m_n)};
        fail_conductor("mixing conductors " + std::to_string(a.m_n) + " and " + std::to_string(b.m_n));
    }
};

}  // namespace epsalg
