#pragma once

#include <string>
#include <vector>

#include "epsalg/algebra.hpp"

namespace epsalg {

/// D x D matrix algebra with the grading |E_ij| = phi(i) - phi(j) induced by
/// a degree map phi on the row/column indices. When the factor is hermitean
/// the conjugate transpose is installed as the involution.
inline EpsAlgebra elementary_matrix(size_t D, const std::vector<GroupElem>& phi, const CommFactor& eps,
                                    const std::string& label = "") {
    if (phi.size() != D) fail_validation("elementary grading: phi must have one degree per index");
    const size_t n = D * D;
    auto idx = [D](size_t i, size_t j) { return i * D + j; };

    std::vector<GroupElem> degrees(n);
    std::vector<std::string> names(n);
    for (size_t i = 0; i < D; ++i)
        for (size_t j = 0; j < D; ++j) {
            degrees[idx(i, j)] = eps.group().sub(phi[i], phi[j]);
            names[idx(i, j)] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        }

    // E_ij E_kl = delta_jk E_il
    std::vector<std::vector<EpsAlgebra::SC>> sc(n, std::vector<EpsAlgebra::SC>(n));
    for (size_t i = 0; i < D; ++i)
        for (size_t j = 0; j < D; ++j)
            for (size_t k = 0; k < D; ++k)
                for (size_t l = 0; l < D; ++l)
                    if (j == k) sc[idx(i, j)][idx(k, l)].emplace_back(static_cast<int>(idx(i, l)), CycNum(1));

    Vec unit = vec_zero(n);
    for (size_t i = 0; i < D; ++i) unit[idx(i, i)] = CycNum(1);

    std::optional<std::vector<Vec>> invol;
    if (eps.hermitean()) {
        std::vector<Vec> tbl(n, vec_zero(n));
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) tbl[idx(i, j)][idx(j, i)] = CycNum(1);
        invol = std::move(tbl);
    }

    return EpsAlgebra::make(eps, std::move(degrees), std::move(sc), std::move(unit), std::move(invol),
                            label.empty() ? "M" + std::to_string(D) : label, std::move(names));
}

/// The block-sign trace of an elementary grading:
/// tr(A) = sum_i eps(phi(i), phi(i)) a_ii, as a coordinate covector.
inline Vec tr_eps_elementary(size_t D, const std::vector<GroupElem>& phi, const CommFactor& eps) {
    Vec t = vec_zero(D * D);
    for (size_t i = 0; i < D; ++i) t[i * D + i] = eps.psi(phi[i]);
    return t;
}

/// The matrix superalgebra M(m, n): elementary Z2 grading with the first m
/// indices even and the last n odd, natural factor (-1)^(ij).
inline EpsAlgebra supermatrix(size_t m, size_t n) {
    CommFactor eps = CommFactor::make(FinAbGroup({2}), {{CycNum(-1)}}, true);
    std::vector<GroupElem> phi(m + n, GroupElem{0});
    for (size_t i = m; i < m + n; ++i) phi[i] = GroupElem{1};
    return elementary_matrix(m + n, phi, eps, "M(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

inline Vec supermatrix_trace(size_t m, size_t n) {
    CommFactor eps = CommFactor::make(FinAbGroup({2}), {{CycNum(-1)}}, true);
    std::vector<GroupElem> phi(m + n, GroupElem{0});
    for (size_t i = m; i < m + n; ++i) phi[i] = GroupElem{1};
    return tr_eps_elementary(m + n, phi, eps);
}

enum class ColorVariant { color, super };

/// Four-block matrix algebra over Z2 x Z2 with blocks of sizes m, n, r, s in
/// degrees (0,0), (1,0), (0,1), (1,1). The color variant uses
/// eps(i,j) = (-1)^(i1 j2 + i2 j1); the super variant (-1)^(i1 j1 + i2 j2).
inline EpsAlgebra color_matrix(size_t m, size_t n, size_t r, size_t s, ColorVariant variant) {
    CommFactor eps =
        variant == ColorVariant::color
            ? CommFactor::make(FinAbGroup({2, 2}), {{CycNum(1), CycNum(-1)}, {CycNum(-1), CycNum(1)}}, true)
            : CommFactor::make(FinAbGroup({2, 2}), {{CycNum(-1), CycNum(1)}, {CycNum(1), CycNum(-1)}}, true);
    std::vector<GroupElem> phi;
    for (size_t i = 0; i < m; ++i) phi.push_back({0, 0});
    for (size_t i = 0; i < n; ++i) phi.push_back({1, 0});
    for (size_t i = 0; i < r; ++i) phi.push_back({0, 1});
    for (size_t i = 0; i < s; ++i) phi.push_back({1, 1});
    std::string label = std::string("M(") + std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(r) + "," + std::to_string(s) +
                        (variant == ColorVariant::color ? ";color)" : ";super)");
    return elementary_matrix(m + n + r + s, phi, eps, label);
}

inline Vec color_matrix_trace(size_t m, size_t n, size_t r, size_t s, ColorVariant variant) {
    std::vector<GroupElem> phi;
    for (size_t i = 0; i < m; ++i) phi.push_back({0, 0});
    for (size_t i = 0; i < n; ++i) phi.push_back({1, 0});
    for (size_t i = 0; i < r; ++i) phi.push_back({0, 1});
    for (size_t i = 0; i < s; ++i) phi.push_back({1, 1});
    return tr_eps_elementary(m + n + r + s, phi, color_matrix(m, n, r, s, variant).factor());
}

/// Crossed product of the scalars by a finite group along a factor set:
/// basis e_alpha with e_alpha e_beta = sigma(alpha, beta) e_{alpha+beta}.
/// Every grading component is one-dimensional. The attached commutation
/// factor defaults to eps_sigma; pass another factor on the same group to
/// study the same product under a different grading twist. When
/// conj(sigma(a,b)) = sigma(b,a) the basis-fixing antilinear map is
/// installed as involution.
inline EpsAlgebra fine_crossed(const FactorSet& sigma, std::optional<CommFactor> eps = std::nullopt,
                               const std::string& label = "") {
    const FinAbGroup& g = sigma.group();
    CommFactor factor = eps ? *eps : eps_from_sigma(sigma);
    if (factor.group() != g) fail_validation("crossed product: factor group mismatch");

    auto elems = g.elements();
    const size_t n = elems.size();
    std::vector<GroupElem> degrees = elems;
    std::vector<std::string> names;
    for (const GroupElem& e : elems) names.push_back("e" + FinAbGroup::elem_str(e));

    std::vector<std::vector<EpsAlgebra::SC>> sc(n, std::vector<EpsAlgebra::SC>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            size_t c = g.elem_index(g.add(elems[a], elems[b]));
            sc[a][b].emplace_back(static_cast<int>(c), sigma.eval(elems[a], elems[b]));
        }

    Vec unit = vec_zero(n);
    unit[g.elem_index(g.zero())] = sigma.eval(g.zero(), g.zero()).inverse();

    std::optional<std::vector<Vec>> invol;
    bool herm_sigma = true;
    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems)
            if (sigma.eval(x, y).conj() != sigma.eval(y, x)) herm_sigma = false;
    if (herm_sigma && factor.hermitean()) {
        std::vector<Vec> tbl(n, vec_zero(n));
        for (size_t a = 0; a < n; ++a) tbl[a][a] = CycNum(1);
        invol = std::move(tbl);
    }

    return EpsAlgebra::make(factor, std::move(degrees), std::move(sc), std::move(unit), std::move(invol),
                            label.empty() ? "C:" + g.str() : label, std::move(names));
}

/// Clifford-type crossed product on (Z2)^q with
/// sigma(i,j) = (-1)^(sum_{p<q} i_p j_q).
inline FactorSet clifford_sigma(size_t q) {
    FinAbGroup g(std::vector<long>(q, 2));
    return FactorSet::from_function(g, [](const GroupElem& i, const GroupElem& j) {
        long e = 0;
        for (size_t p = 0; p < i.size(); ++p)
            for (size_t r = p + 1; r < j.size(); ++r) e += i[p] * j[r];
        return e % 2 == 0 ? CycNum(1) : CycNum(-1);
    });
}

inline EpsAlgebra clifford(size_t q) {
    return fine_crossed(clifford_sigma(q), std::nullopt, "Cl(" + std::to_string(q) + ")");
}

/// The factor set of the Pauli basis of the 2x2 matrices over Z2 x Z2:
/// six +-i values on the distinct nonzero pairs, squares equal to one.
inline FactorSet pauli_sigma(int conductor = 4) {
    FinAbGroup g({2, 2});
    CycNum I = CycNum::imaginary_unit(conductor);
    return FactorSet::from_function(g, [&](const GroupElem& a, const GroupElem& b) {
        static const GroupElem t1{1, 0}, t2{0, 1}, t3{1, 1};
        if (a == t1 && b == t2) return I;
        if (a == t2 && b == t1) return -I;
        if (a == t1 && b == t3) return -I;
        if (a == t3 && b == t1) return I;
        if (a == t2 && b == t3) return I;
        if (a == t3 && b == t2) return -I;
        return CycNum(1);
    });
}

/// Pauli algebra as an abstract crossed product, with an optional alternate
/// commutation factor (the "super" variant of the fine grading).
inline EpsAlgebra pauli_algebra(std::optional<CommFactor> eps = std::nullopt, int conductor = 4) {
    return fine_crossed(pauli_sigma(conductor), std::move(eps), "Pauli");
}

/// Exterior algebra on q anticommuting degree-1 generators over Z with the
/// natural factor (-1)^(pq). Basis indexed by subsets in binary order.
inline EpsAlgebra grassmann(size_t q, size_t practical_bound = 6) {
    if (q < 1) fail_validation("grassmann: need at least one generator");
    if (q > practical_bound) fail_validation("grassmann: generator count exceeds the practical bound");
    CommFactor eps = CommFactor::make(FinAbGroup({0}), {{CycNum(-1)}}, true);
    const size_t n = size_t(1) << q;

    auto popcount = [](size_t m) {
        long c = 0;
        while (m) {
            c += static_cast<long>(m & 1);
            m >>= 1;
        }
        return c;
    };

    std::vector<GroupElem> degrees(n);
    std::vector<std::string> names(n);
    for (size_t m = 0; m < n; ++m) {
        degrees[m] = GroupElem{popcount(m)};
        if (m == 0) {
            names[m] = "1l";
            continue;
        }
        std::string s;
        for (size_t b = 0; b < q; ++b)
            if (m & (size_t(1) << b)) s += "th" + std::to_string(b + 1);
        names[m] = s;
    }

    // theta_I theta_J = sign * theta_{I u J}, zero on overlap; the sign counts
    // the transpositions moving J's generators past the tail of I.
    std::vector<std::vector<EpsAlgebra::SC>> sc(n, std::vector<EpsAlgebra::SC>(n));
    for (size_t mi = 0; mi < n; ++mi)
        for (size_t mj = 0; mj < n; ++mj) {
            if (mi & mj) continue;
            long swaps = 0;
            for (size_t b = 0; b < q; ++b)
                if (mj & (size_t(1) << b))
                    for (size_t c = b + 1; c < q; ++c)
                        if (mi & (size_t(1) << c)) ++swaps;
            sc[mi][mj].emplace_back(static_cast<int>(mi | mj), swaps % 2 == 0 ? CycNum(1) : CycNum(-1));
        }

    Vec unit = vec_zero(n);
    unit[0] = CycNum(1);
    return EpsAlgebra::make(eps, std::move(degrees), std::move(sc), std::move(unit), std::nullopt,
                            "Lambda(" + std::to_string(q) + ")", std::move(names));
}

/// The dual superderivations of the exterior algebra: al^i sends theta_i to 1
/// and the other generators to 0, extended with the twisted Leibniz rule.
/// Homogeneous of degree -1; they commute pairwise and are a free basis of
/// the derivations as a module over the whole algebra.
inline std::vector<HomMap> grassmann_dual_derivations(const EpsAlgebra& a, size_t q) {
    std::vector<HomMap> out;
    const size_t n = a.dim();
    for (size_t i = 0; i < q; ++i) {
        HomMap m = HomMap::zero(a, GroupElem{-1});
        for (size_t mask = 0; mask < n; ++mask) {
            if (!(mask & (size_t(1) << i))) continue;
            // sign: generators below i inside the subset each contribute -1
            long before = 0;
            for (size_t b = 0; b < i; ++b)
                if (mask & (size_t(1) << b)) ++before;
            size_t target = mask & ~(size_t(1) << i);
            m.mat[target][mask] = before % 2 == 0 ? CycNum(1) : CycNum(-1);
        }
        if (!leibniz_ok(a, m)) fail_validation("grassmann duals: Leibniz recheck failed");
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace epsalg
