#pragma once

#include <map>
#include <string>
#include <utility>

#include "epsalg/cyclotomic.hpp"
#include "epsalg/error.hpp"

namespace epsalg {

/// The coefficient ring of the deformation module: Laurent polynomials in the
/// deformation parameter theta and ordinary polynomials in the coupling alpha,
/// with coefficients in Q(zeta_N). Exact ring arithmetic; not a field.
class MoyalScalar {
public:
    /// key = (theta exponent, alpha exponent); alpha exponent >= 0.
    using Key = std::pair<long, long>;

    MoyalScalar() = default;

    static MoyalScalar zero() { return MoyalScalar(); }
    static MoyalScalar constant(const CycNum& c) { return term(0, 0, c); }
    static MoyalScalar term(long theta_exp, long alpha_exp, const CycNum& c) {
        if (alpha_exp < 0) fail_validation("MoyalScalar: alpha exponent must be non-negative");
        MoyalScalar r;
        if (!c.is_zero()) r.m_terms[{theta_exp, alpha_exp}] = c;
        return r;
    }
    static MoyalScalar theta_power(long e, int conductor) {
        (void)conductor;
        return term(e, 0, CycNum(1));
    }
    static MoyalScalar alpha_power(long e, int conductor) {
        (void)conductor;
        return term(0, e, CycNum(1));
    }

    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first == Key{0, 0});
    }
    /// Constant part (coefficient of theta^0 alpha^0).
    CycNum constant_part() const {
        auto it = m_terms.find({0, 0});
        return it == m_terms.end() ? CycNum(0) : it->second;
    }

    const std::map<Key, CycNum>& terms() const { return m_terms; }

    friend MoyalScalar operator+(const MoyalScalar& a, const MoyalScalar& b) {
        MoyalScalar r = a;
        for (const auto& [k, c] : b.m_terms) r.add_term(k, c);
        return r;
    }
    friend MoyalScalar operator-(const MoyalScalar& a, const MoyalScalar& b) {
        MoyalScalar r = a;
        for (const auto& [k, c] : b.m_terms) r.add_term(k, -c);
        return r;
    }
    MoyalScalar operator-() const {
        MoyalScalar r;
        for (const auto& [k, c] : m_terms) r.m_terms[k] = -c;
        return r;
    }
    friend MoyalScalar operator*(const MoyalScalar& a, const MoyalScalar& b) {
        MoyalScalar r;
        for (const auto& [ka, ca] : a.m_terms)
            for (const auto& [kb, cb] : b.m_terms)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    MoyalScalar conj() const {
        MoyalScalar r;
        for (const auto& [k, c] : m_terms) r.m_terms[k] = c.conj();
        return r;
    }

    friend bool operator==(const MoyalScalar& a, const MoyalScalar& b) { return a.m_terms == b.m_terms; }
    friend bool operator!=(const MoyalScalar& a, const MoyalScalar& b) { return !(a == b); }

    /// Canonical literal, e.g. "2*theta^-1", "alpha^2", "(1 - zeta^1@4)*theta*alpha".
    std::string str() const {
        if (m_terms.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : m_terms) {
            std::string coeff = c.str();
            bool needs_paren = coeff.find(' ') != std::string::npos;
            std::string mon;
            if (k.first != 0) mon += (k.first == 1) ? "theta" : "theta^" + std::to_string(k.first);
            if (k.second != 0) {
                if (!mon.empty()) mon += "*";
                mon += (k.second == 1) ? "alpha" : "alpha^" + std::to_string(k.second);
            }
            std::string term;
            if (mon.empty())
                term = needs_paren ? "(" + coeff + ")" : coeff;
            else if (coeff == "1")
                term = mon;
            else if (coeff == "-1")
                term = "-" + mon;
            else
                term = (needs_paren ? "(" + coeff + ")" : coeff) + "*" + mon;
            if (first) {
                out = term;
                first = false;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

private:
    std::map<Key, CycNum> m_terms;  // no zero values stored

    void add_term(const Key& k, const CycNum& c) {
        auto it = m_terms.find(k);
        if (it == m_terms.end()) {
            if (!c.is_zero()) m_terms.emplace(k, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) m_terms.erase(it);
    }
};

}  // namespace epsalg
