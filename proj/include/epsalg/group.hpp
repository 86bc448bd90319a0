#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "epsalg/error.hpp"

namespace epsalg {

/// Element of a finitely generated abelian group, stored as reduced
/// generator coordinates.
using GroupElem = std::vector<long>;

/// Finitely generated abelian group Z_{m_1} x ... x Z_{m_k}; order 0 marks an
/// infinite cyclic factor.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<long> orders) : m_orders(std::move(orders)) {
        for (long m : m_orders)
            if (m < 0) fail_validation("group: cyclic orders must be >= 0");
    }

    /// Parse "Z2xZ2", "Z", "Z3xZ", "0" (trivial group).
    static FinAbGroup parse(const std::string& text) {
        if (text == "0" || text == "1" || text.empty()) return FinAbGroup(std::vector<long>{});
        std::vector<long> orders;
        size_t pos = 0;
        while (pos < text.size()) {
            size_t next = text.find('x', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (tok.empty() || tok[0] != 'Z') fail_parse("group: bad token '" + tok + "' in '" + text + "'");
            if (tok.size() == 1) {
                orders.push_back(0);
            } else {
                try {
                    orders.push_back(std::stol(tok.substr(1)));
                } catch (...) {
                    fail_parse("group: bad token '" + tok + "'");
                }
                if (orders.back() < 2) fail_parse("group: cyclic order must be >= 2 in '" + tok + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return FinAbGroup(orders);
    }

    std::string str() const {
        if (m_orders.empty()) return "0";
        std::string out;
        for (size_t r = 0; r < m_orders.size(); ++r) {
            if (r) out += "x";
            out += m_orders[r] == 0 ? "Z" : "Z" + std::to_string(m_orders[r]);
        }
        return out;
    }

    size_t rank() const { return m_orders.size(); }
    const std::vector<long>& orders() const { return m_orders; }

    bool finite() const {
        for (long m : m_orders)
            if (m == 0) return false;
        return true;
    }
    long size() const {
        if (!finite()) fail_validation("group: infinite group has no size");
        long s = 1;
        for (long m : m_orders) s *= m;
        return s;
    }

    GroupElem zero() const { return GroupElem(m_orders.size(), 0); }

    GroupElem reduce(GroupElem v) const {
        check_rank(v);
        for (size_t r = 0; r < m_orders.size(); ++r)
            if (m_orders[r] > 0) v[r] = ((v[r] % m_orders[r]) + m_orders[r]) % m_orders[r];
        return v;
    }

    GroupElem add(const GroupElem& a, const GroupElem& b) const {
        check_rank(a);
        check_rank(b);
        GroupElem v(m_orders.size());
        for (size_t r = 0; r < m_orders.size(); ++r) v[r] = a[r] + b[r];
        return reduce(std::move(v));
    }
    GroupElem neg(const GroupElem& a) const {
        check_rank(a);
        GroupElem v(m_orders.size());
        for (size_t r = 0; r < m_orders.size(); ++r) v[r] = -a[r];
        return reduce(std::move(v));
    }
    GroupElem sub(const GroupElem& a, const GroupElem& b) const { return add(a, neg(b)); }

    GroupElem scale(long n, const GroupElem& a) const {
        check_rank(a);
        GroupElem v(m_orders.size());
        for (size_t r = 0; r < m_orders.size(); ++r) v[r] = n * a[r];
        return reduce(std::move(v));
    }

    bool is_zero(const GroupElem& a) const {
        for (long c : a)
            if (c != 0) return false;
        return true;
    }

    GroupElem generator(size_t r) const {
        GroupElem v(m_orders.size(), 0);
        v[r] = m_orders[r] == 1 ? 0 : 1;
        return v;
    }

    /// Additive order of an element (0 for infinite order).
    long elem_order(const GroupElem& a) const {
        check_rank(a);
        long ord = 1;
        for (size_t r = 0; r < m_orders.size(); ++r) {
            if (a[r] == 0) continue;
            if (m_orders[r] == 0) return 0;
            long g = std::gcd(a[r], m_orders[r]);
            long o = m_orders[r] / g;
            ord = ord / std::gcd(ord, o) * o;
        }
        return ord;
    }

    /// All elements in deterministic mixed-radix order; finite groups only.
    std::vector<GroupElem> elements() const {
        if (!finite()) fail_validation("group: cannot enumerate an infinite group");
        std::vector<GroupElem> out;
        GroupElem v = zero();
        while (true) {
            out.push_back(v);
            size_t r = 0;
            for (; r < m_orders.size(); ++r) {
                if (++v[r] < m_orders[r]) break;
                v[r] = 0;
            }
            if (r == m_orders.size()) break;
        }
        if (m_orders.empty()) out.assign(1, GroupElem{});
        return out;
    }

    /// Index of an element in the elements() ordering.
    size_t elem_index(const GroupElem& a) const {
        GroupElem v = reduce(a);
        size_t idx = 0, stride = 1;
        for (size_t r = 0; r < m_orders.size(); ++r) {
            idx += static_cast<size_t>(v[r]) * stride;
            stride *= static_cast<size_t>(m_orders[r]);
        }
        return idx;
    }

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.m_orders == b.m_orders; }
    friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

    /// Direct product, concatenating generator lists.
    static FinAbGroup product(const FinAbGroup& a, const FinAbGroup& b) {
        std::vector<long> orders = a.m_orders;
        orders.insert(orders.end(), b.m_orders.begin(), b.m_orders.end());
        return FinAbGroup(orders);
    }

    static std::string elem_str(const GroupElem& a) {
        std::string out = "(";
        for (size_t r = 0; r < a.size(); ++r) {
            if (r) out += ",";
            out += std::to_string(a[r]);
        }
        return out + ")";
    }

private:
    std::vector<long> m_orders;

    void check_rank(const GroupElem& a) const {
        if (a.size() != m_orders.size()) fail_validation("group: element rank mismatch");
    }
};

}  // namespace epsalg
