#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epsalg/factor.hpp"
#include "epsalg/linalg.hpp"

namespace epsalg {

/// A finite-dimensional graded associative unital algebra over Q(zeta_N),
/// given by a homogeneous basis, its degrees and sparse structure constants,
/// together with a commutation factor on the grading group. Construction
/// validates grading compatibility, associativity on every basis triple and
/// the unit axioms exactly; an optional antilinear involution is validated
/// against (a*)* = a, (ab)* = b* a* and deg(a*) = -deg(a).
class EpsAlgebra {
public:
    /// Sparse coordinates: list of (basis index, coefficient).
    using SC = std::vector<std::pair<int, CycNum>>;

    static EpsAlgebra make(CommFactor eps, std::vector<GroupElem> degrees,
                           std::vector<std::vector<SC>> constants, Vec unit,
                           std::optional<std::vector<Vec>> involution = std::nullopt,
                           std::string label = "", std::vector<std::string> basis_names = {}) {
        EpsAlgebra a;
        a.m_eps = std::move(eps);
        a.m_deg = std::move(degrees);
        a.m_sc = std::move(constants);
        a.m_unit = std::move(unit);
        a.m_invol = std::move(involution);
        a.m_label = std::move(label);
        const size_t n = a.m_deg.size();
        if (a.m_sc.size() != n || a.m_unit.size() != n)
            fail_validation("algebra: dimension mismatch between degrees, constants and unit");
        for (auto& row : a.m_sc)
            if (row.size() != n) fail_validation("algebra: constants table must be n x n");
        for (size_t i = 0; i < n; ++i) a.m_deg[i] = a.group().reduce(a.m_deg[i]);
        a.m_names = std::move(basis_names);
        if (a.m_names.empty())
            for (size_t i = 0; i < n; ++i) a.m_names.push_back("x" + std::to_string(i));
        if (a.m_names.size() != n) fail_validation("algebra: basis name count mismatch");

        // grading: x_i x_j only meets degrees deg_i + deg_j
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                GroupElem want = a.group().add(a.m_deg[i], a.m_deg[j]);
                for (const auto& [k, c] : a.m_sc[i][j])
                    if (!c.is_zero() && a.m_deg[static_cast<size_t>(k)] != want)
                        fail_validation("algebra '" + a.m_label + "': grading fails at (" + std::to_string(i) +
                                        "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }

        // unit: homogeneous of degree zero and neutral on the basis
        for (const auto& [deg, part] : a.homogeneous_parts(a.m_unit))
            if (!a.group().is_zero(deg))
                fail_validation("algebra '" + a.m_label + "': unit is not of degree 0");
        for (size_t i = 0; i < n; ++i) {
            Vec xi = vec_zero(n);
            xi[i] = CycNum(1);
            if (a.mul(a.m_unit, xi) != xi || a.mul(xi, a.m_unit) != xi)
                fail_validation("algebra '" + a.m_label + "': unit axiom fails at basis " + std::to_string(i));
        }

        // associativity on all basis triples
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    Vec xi = vec_zero(n), xj = vec_zero(n), xk = vec_zero(n);
                    xi[i] = xj[j] = xk[k] = CycNum(1);
                    if (a.mul(a.mul(xi, xj), xk) != a.mul(xi, a.mul(xj, xk)))
                        fail_validation("algebra '" + a.m_label + "': associativity fails at (" +
                                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }

        if (a.m_invol) a.validate_involution();

        for (size_t i = 0; i < n; ++i) a.m_by_degree[a.m_deg[i]].push_back(static_cast<int>(i));
        return a;
    }

    size_t dim() const { return m_deg.size(); }
    const CommFactor& factor() const { return m_eps; }
    const FinAbGroup& group() const { return m_eps.group(); }
    const GroupElem& degree(size_t i) const { return m_deg[i]; }
    const std::vector<GroupElem>& degrees() const { return m_deg; }
    const Vec& unit() const { return m_unit; }
    const std::string& label() const { return m_label; }
    const std::string& basis_name(size_t i) const { return m_names[i]; }
    const std::vector<std::string>& basis_names() const { return m_names; }
    const SC& sc(size_t i, size_t j) const { return m_sc[i][j]; }
    bool has_involution() const { return m_invol.has_value(); }
    const std::vector<Vec>& involution_table() const {
        if (!m_invol) fail_validation("algebra '" + m_label + "': no involution installed");
        return *m_invol;
    }

    CycNum eps(const GroupElem& i, const GroupElem& j) const { return m_eps.eval(i, j); }

    /// Distinct basis degrees with their basis index lists, in degree order.
    const std::map<GroupElem, std::vector<int>>& components() const { return m_by_degree; }
    std::vector<int> basis_of_degree(const GroupElem& d) const {
        auto it = m_by_degree.find(group().reduce(d));
        return it == m_by_degree.end() ? std::vector<int>{} : it->second;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec out = vec_zero(dim());
        for (size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                CycNum s = a[i] * b[j];
                for (const auto& [k, c] : m_sc[i][j]) out[static_cast<size_t>(k)] = out[static_cast<size_t>(k)] + s * c;
            }
        }
        return out;
    }

    /// Homogeneous parts of an element, keyed by degree.
    std::vector<std::pair<GroupElem, Vec>> homogeneous_parts(const Vec& a) const {
        std::map<GroupElem, Vec> parts;
        for (size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            auto [it, fresh] = parts.try_emplace(m_deg[i], vec_zero(dim()));
            it->second[i] = a[i];
        }
        return {parts.begin(), parts.end()};
    }

    bool is_homogeneous(const Vec& a, GroupElem* deg_out = nullptr) const {
        auto parts = homogeneous_parts(a);
        if (parts.size() > 1) return false;
        if (deg_out) *deg_out = parts.empty() ? group().zero() : parts[0].first;
        return true;
    }

    /// [a, b] = ab - eps(|a|,|b|) ba, extended bilinearly over homogeneous parts.
    Vec bracket(const Vec& a, const Vec& b) const {
        Vec out = vec_zero(dim());
        for (const auto& [da, pa] : homogeneous_parts(a))
            for (const auto& [db, pb] : homogeneous_parts(b)) {
                Vec term = mul(pa, pb);
                vec_add_scaled(term, -eps(da, db), mul(pb, pa));
                for (size_t k = 0; k < dim(); ++k) out[k] = out[k] + term[k];
            }
        return out;
    }

    /// Antilinear involution a -> a*.
    Vec star(const Vec& a) const {
        const auto& tbl = involution_table();
        Vec out = vec_zero(dim());
        for (size_t i = 0; i < dim(); ++i)
            if (!a[i].is_zero()) vec_add_scaled(out, a[i].conj(), tbl[i]);
        return out;
    }

    bool is_unitary(const Vec& g) const { return mul(star(g), g) == m_unit; }

    std::string elem_str(const Vec& a) const {
        if (vec_is_zero(a)) return "0";
        std::string out;
        bool first = true;
        for (size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            std::string c = a[i].str();
            std::string term;
            if (c == "1")
                term = m_names[i];
            else if (c == "-1")
                term = "-" + m_names[i];
            else if (c.find(' ') != std::string::npos)
                term = "(" + c + ")*" + m_names[i];
            else
                term = c + "*" + m_names[i];
            if (first) {
                out = term;
                first = false;
            } else if (term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

private:
    CommFactor m_eps;
    std::vector<GroupElem> m_deg;
    std::vector<std::vector<SC>> m_sc;
    Vec m_unit;
    std::optional<std::vector<Vec>> m_invol;  // column i = coordinates of x_i*
    std::string m_label;
    std::vector<std::string> m_names;
    std::map<GroupElem, std::vector<int>> m_by_degree;

    void validate_involution() const {
        const auto& tbl = *m_invol;
        if (tbl.size() != dim()) fail_validation("algebra '" + m_label + "': involution table size mismatch");
        for (size_t i = 0; i < dim(); ++i) {
            if (tbl[i].size() != dim()) fail_validation("algebra '" + m_label + "': involution table size mismatch");
            // degree reversal: x_i* lands in degree -deg(x_i)
            GroupElem want = group().neg(m_deg[i]);
            for (size_t k = 0; k < dim(); ++k)
                if (!tbl[i][k].is_zero() && m_deg[k] != want)
                    fail_validation("algebra '" + m_label + "': involution does not reverse the degree at " +
                                    std::to_string(i));
            Vec xi = vec_zero(dim());
            xi[i] = CycNum(1);
            if (star(star(xi)) != xi)
                fail_validation("algebra '" + m_label + "': involution is not involutive at " + std::to_string(i));
        }
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j) {
                Vec xi = vec_zero(dim()), xj = vec_zero(dim());
                xi[i] = xj[j] = CycNum(1);
                if (star(mul(xi, xj)) != mul(star(xj), star(xi)))
                    fail_validation("algebra '" + m_label + "': (ab)* = b* a* fails at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
            }
    }
};

/// A homogeneous linear map of fixed degree: sends A^gamma into
/// A^(gamma + deg). Stored densely; mat[k][j] is the x_k coefficient of the
/// image of x_j.
struct HomMap {
    GroupElem deg;
    std::vector<Vec> mat;

    static HomMap zero(const EpsAlgebra& a, GroupElem d) {
        return HomMap{a.group().reduce(std::move(d)), std::vector<Vec>(a.dim(), vec_zero(a.dim()))};
    }

    Vec apply(const Vec& v) const {
        Vec out = vec_zero(mat.size());
        for (size_t j = 0; j < mat.size(); ++j) {
            if (v[j].is_zero()) continue;
            for (size_t k = 0; k < mat.size(); ++k)
                if (!mat[k][j].is_zero()) out[k] = out[k] + mat[k][j] * v[j];
        }
        return out;
    }

    Vec column(size_t j) const {
        Vec out(mat.size());
        for (size_t k = 0; k < mat.size(); ++k) out[k] = mat[k][j];
        return out;
    }

    Vec flatten() const {
        Vec out;
        out.reserve(mat.size() * mat.size());
        for (const Vec& row : mat) out.insert(out.end(), row.begin(), row.end());
        return out;
    }

    bool is_zero() const {
        for (const Vec& row : mat)
            if (!vec_is_zero(row)) return false;
        return true;
    }

    friend bool operator==(const HomMap& x, const HomMap& y) { return x.deg == y.deg && x.mat == y.mat; }
};

/// A derivation split into homogeneous parts of distinct degrees.
struct Derivation {
    std::vector<HomMap> parts;

    Vec apply(const Vec& v) const {
        if (parts.empty()) return {};
        Vec out = vec_zero(parts[0].mat.size());
        for (const HomMap& p : parts) {
            Vec t = p.apply(v);
            for (size_t k = 0; k < out.size(); ++k) out[k] = out[k] + t[k];
        }
        return out;
    }

    /// The part of a given degree, or a zero map of that degree.
    HomMap part_of_degree(const EpsAlgebra& a, const GroupElem& d) const {
        GroupElem rd = a.group().reduce(d);
        for (const HomMap& p : parts)
            if (p.deg == rd) return p;
        return HomMap::zero(a, rd);
    }
};

/// Twisted Leibniz rule for a homogeneous map, checked on all basis pairs.
inline bool leibniz_ok(const EpsAlgebra& a, const HomMap& x) {
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) {
            Vec xi = vec_zero(a.dim()), xj = vec_zero(a.dim());
            xi[i] = xj[j] = CycNum(1);
            Vec lhs = x.apply(a.mul(xi, xj));
            Vec rhs = a.mul(x.apply(xi), xj);
            vec_add_scaled(rhs, a.eps(x.deg, a.degree(i)), a.mul(xi, x.apply(xj)));
            if (lhs != rhs) return false;
        }
    return true;
}

/// Inner derivation ad_a(b) = [a, b] for homogeneous a.
inline HomMap ad_map(const EpsAlgebra& a, const Vec& elem) {
    GroupElem d;
    if (!a.is_homogeneous(elem, &d)) fail_validation("ad: element must be homogeneous");
    HomMap m = HomMap::zero(a, d);
    for (size_t j = 0; j < a.dim(); ++j) {
        Vec xj = vec_zero(a.dim());
        xj[j] = CycNum(1);
        Vec img = a.bracket(elem, xj);
        for (size_t k = 0; k < a.dim(); ++k) m.mat[k][j] = img[k];
    }
    return m;
}

inline Derivation ad_derivation(const EpsAlgebra& a, const Vec& elem) {
    Derivation d;
    for (const auto& [deg, part] : a.homogeneous_parts(elem)) d.parts.push_back(ad_map(a, part));
    return d;
}

/// Composition and bracket of homogeneous maps.
inline HomMap compose(const EpsAlgebra& a, const HomMap& x, const HomMap& y) {
    HomMap out = HomMap::zero(a, a.group().add(x.deg, y.deg));
    for (size_t j = 0; j < a.dim(); ++j) {
        Vec img = x.apply(y.column(j));
        for (size_t k = 0; k < a.dim(); ++k) out.mat[k][j] = img[k];
    }
    return out;
}

inline HomMap map_bracket(const EpsAlgebra& a, const HomMap& x, const HomMap& y) {
    HomMap xy = compose(a, x, y), yx = compose(a, y, x);
    HomMap out = HomMap::zero(a, xy.deg);
    CycNum e = a.eps(x.deg, y.deg);
    for (size_t k = 0; k < a.dim(); ++k)
        for (size_t j = 0; j < a.dim(); ++j) out.mat[k][j] = xy.mat[k][j] - e * yx.mat[k][j];
    return out;
}

/// Basis of the homogeneous derivations of one degree: the exact solution
/// space of the twisted Leibniz system over all basis pairs.
inline std::vector<HomMap> derivation_space(const EpsAlgebra& a, const GroupElem& delta_in) {
    GroupElem delta = a.group().reduce(delta_in);
    const size_t n = a.dim();

    // unknowns: entries (k, j) with deg_k = deg_j + delta
    std::vector<std::pair<size_t, size_t>> unknowns;
    std::map<std::pair<size_t, size_t>, size_t> index;
    for (size_t j = 0; j < n; ++j) {
        GroupElem want = a.group().add(a.degree(j), delta);
        for (int k : a.basis_of_degree(want)) {
            index[{static_cast<size_t>(k), j}] = unknowns.size();
            unknowns.emplace_back(static_cast<size_t>(k), j);
        }
    }
    if (unknowns.empty()) return {};

    RowEchelon re(unknowns.size());
    auto coeff = [&](Vec& row, size_t k, size_t j, const CycNum& c) {
        auto it = index.find({k, j});
        if (it != index.end()) row[it->second] = row[it->second] + c;
    };
    for (size_t i = 0; i < n; ++i) {
        CycNum e = a.eps(delta, a.degree(i));
        for (size_t j = 0; j < n; ++j) {
            GroupElem out_deg = a.group().add(a.group().add(a.degree(i), a.degree(j)), delta);
            for (int kk : a.basis_of_degree(out_deg)) {
                size_t k = static_cast<size_t>(kk);
                Vec row = vec_zero(unknowns.size());
                // X(x_i x_j) component k
                for (const auto& [m, c] : a.sc(i, j)) coeff(row, k, static_cast<size_t>(m), c);
                // - X(x_i) x_j component k
                for (size_t l = 0; l < n; ++l)
                    for (const auto& [kk2, c] : a.sc(l, j))
                        if (static_cast<size_t>(kk2) == k) coeff(row, l, i, -c);
                // - eps(delta, deg_i) x_i X(x_j) component k
                for (size_t l = 0; l < n; ++l)
                    for (const auto& [kk2, c] : a.sc(i, l))
                        if (static_cast<size_t>(kk2) == k) coeff(row, l, j, -(e * c));
                if (!vec_is_zero(row)) re.add_row(std::move(row));
            }
        }
    }

    std::vector<HomMap> out;
    for (const Vec& sol : re.nullspace()) {
        HomMap m = HomMap::zero(a, delta);
        for (size_t u = 0; u < unknowns.size(); ++u) m.mat[unknowns[u].first][unknowns[u].second] = sol[u];
        if (!leibniz_ok(a, m)) fail_validation("derivation solver: solution fails the Leibniz recheck");
        out.push_back(std::move(m));
    }
    return out;
}

/// Achievable derivation degrees: differences of basis degrees. Degrees
/// outside this finite set have zero derivation space.
inline std::vector<GroupElem> derivation_degree_set(const EpsAlgebra& a) {
    std::map<GroupElem, bool> seen;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t k = 0; k < a.dim(); ++k) seen[a.group().sub(a.degree(k), a.degree(i))] = true;
    std::vector<GroupElem> out;
    for (const auto& [d, _] : seen) out.push_back(d);
    return out;
}

inline std::map<GroupElem, std::vector<HomMap>> derivation_space_all(const EpsAlgebra& a) {
    std::map<GroupElem, std::vector<HomMap>> out;
    for (const GroupElem& d : derivation_degree_set(a)) {
        auto basis = derivation_space(a, d);
        if (!basis.empty()) out.emplace(d, std::move(basis));
    }
    return out;
}

/// Homogeneous basis of the graded center {a : [a, b] = 0 for all b},
/// solved per degree by an exact nullspace.
inline std::map<GroupElem, std::vector<Vec>> center(const EpsAlgebra& a) {
    const size_t n = a.dim();
    std::map<GroupElem, std::vector<Vec>> out;
    for (const auto& [delta, idxs] : a.components()) {
        RowEchelon re(idxs.size());
        for (size_t j = 0; j < n; ++j) {
            CycNum e = a.eps(delta, a.degree(j));
            for (size_t k = 0; k < n; ++k) {
                Vec row = vec_zero(idxs.size());
                for (size_t u = 0; u < idxs.size(); ++u) {
                    size_t p = static_cast<size_t>(idxs[u]);
                    CycNum c(0);
                    for (const auto& [kk, cc] : a.sc(p, j))
                        if (static_cast<size_t>(kk) == k) c = c + cc;
                    for (const auto& [kk, cc] : a.sc(j, p))
                        if (static_cast<size_t>(kk) == k) c = c - e * cc;
                    row[u] = c;
                }
                if (!vec_is_zero(row)) re.add_row(std::move(row));
            }
        }
        std::vector<Vec> basis;
        for (const Vec& sol : re.nullspace()) {
            Vec v = vec_zero(n);
            for (size_t u = 0; u < idxs.size(); ++u) v[static_cast<size_t>(idxs[u])] = sol[u];
            basis.push_back(std::move(v));
        }
        if (!basis.empty()) out.emplace(delta, std::move(basis));
    }
    return out;
}

inline size_t center_dim(const EpsAlgebra& a) {
    size_t d = 0;
    for (const auto& [deg, basis] : center(a)) d += basis.size();
    return d;
}

/// Basis of twisted trace functionals T with T(ab) = eps(|a|,|b|) T(ba),
/// returned as coordinate covectors.
inline std::vector<Vec> trace_space(const EpsAlgebra& a) {
    const size_t n = a.dim();
    RowEchelon re(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            CycNum e = a.eps(a.degree(i), a.degree(j));
            Vec row = vec_zero(n);
            for (const auto& [k, c] : a.sc(i, j)) row[static_cast<size_t>(k)] = row[static_cast<size_t>(k)] + c;
            for (const auto& [k, c] : a.sc(j, i)) row[static_cast<size_t>(k)] = row[static_cast<size_t>(k)] - e * c;
            if (!vec_is_zero(row)) re.add_row(std::move(row));
        }
    return re.nullspace();
}

/// Inner/outer split per degree. Inner spans come from ad over a basis of
/// each degree component; outer dimension is the solver dimension minus the
/// inner rank.
struct InnerOuter {
    std::map<GroupElem, std::vector<HomMap>> inner_basis;
    std::map<GroupElem, size_t> der_dim;
    std::map<GroupElem, size_t> inner_dim;
    std::map<GroupElem, size_t> outer_dim;

    size_t total_der() const {
        size_t t = 0;
        for (auto& [d, v] : der_dim) t += v;
        return t;
    }
    size_t total_outer() const {
        size_t t = 0;
        for (auto& [d, v] : outer_dim) t += v;
        return t;
    }
};

inline InnerOuter inner_outer(const EpsAlgebra& a) {
    InnerOuter io;
    auto all = derivation_space_all(a);
    std::map<GroupElem, bool> degrees;
    for (const auto& [d, basis] : all) degrees[d] = true;
    for (const auto& [d, idxs] : a.components()) degrees[d] = true;

    for (const auto& [delta, _] : degrees) {
        size_t der = 0;
        if (auto it = all.find(delta); it != all.end()) der = it->second.size();
        RowEchelon re(a.dim() * a.dim());
        std::vector<HomMap> inner;
        for (int p : a.basis_of_degree(delta)) {
            Vec e = vec_zero(a.dim());
            e[static_cast<size_t>(p)] = CycNum(1);
            HomMap m = ad_map(a, e);
            if (re.add_row(m.flatten())) inner.push_back(std::move(m));
        }
        size_t inn = inner.size();
        if (der == 0 && inn == 0) continue;
        if (inn > der) fail_validation("inner_outer: inner span exceeds the derivation space");
        io.der_dim[delta] = der;
        io.inner_dim[delta] = inn;
        io.outer_dim[delta] = der - inn;
        io.inner_basis[delta] = std::move(inner);
    }
    return io;
}

/// Twisted tensor product of two algebras over the same commutation factor:
/// (a (x) b)(c (x) d) = eps(|b|,|c|) (ac) (x) (bd) on the product basis.
inline EpsAlgebra tensor_product(const EpsAlgebra& A, const EpsAlgebra& B, const std::string& label = "") {
    if (A.factor() != B.factor()) fail_validation("tensor product: commutation factors must match");
    const size_t nA = A.dim(), nB = B.dim(), n = nA * nB;
    auto pair_index = [&](size_t i, size_t j) { return i * nB + j; };

    std::vector<GroupElem> degrees(n);
    std::vector<std::string> names(n);
    for (size_t i = 0; i < nA; ++i)
        for (size_t j = 0; j < nB; ++j) {
            degrees[pair_index(i, j)] = A.group().add(A.degree(i), B.degree(j));
            names[pair_index(i, j)] = A.basis_name(i) + "(x)" + B.basis_name(j);
        }

    std::vector<std::vector<EpsAlgebra::SC>> sc(n, std::vector<EpsAlgebra::SC>(n));
    for (size_t i = 0; i < nA; ++i)
        for (size_t j = 0; j < nB; ++j)
            for (size_t k = 0; k < nA; ++k)
                for (size_t l = 0; l < nB; ++l) {
                    CycNum tw = A.eps(B.degree(j), A.degree(k));
                    EpsAlgebra::SC& cell = sc[pair_index(i, j)][pair_index(k, l)];
                    for (const auto& [p, ca] : A.sc(i, k))
                        for (const auto& [q, cb] : B.sc(j, l)) {
                            CycNum c = tw * ca * cb;
                            if (!c.is_zero()) cell.emplace_back(static_cast<int>(pair_index(static_cast<size_t>(p), static_cast<size_t>(q))), c);
                        }
                }

    Vec unit = vec_zero(n);
    for (size_t i = 0; i < nA; ++i)
        for (size_t j = 0; j < nB; ++j) {
            CycNum c = A.unit()[i] * B.unit()[j];
            if (!c.is_zero()) unit[pair_index(i, j)] = c;
        }

    return EpsAlgebra::make(A.factor(), std::move(degrees), std::move(sc), std::move(unit), std::nullopt,
                            label.empty() ? A.label() + "(x)" + B.label() : label, std::move(names));
}

/// Whether every homogeneous pair of elements commutes up to the factor.
inline bool is_eps_commutative(const EpsAlgebra& a) {
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) {
            Vec xi = vec_zero(a.dim()), xj = vec_zero(a.dim());
            xi[i] = xj[j] = CycNum(1);
            if (!vec_is_zero(a.bracket(xi, xj))) return false;
        }
    return true;
}

/// Reality of a derivation: (X_k(a))* = eps(|a|, k) X_{-k}(a*) on all basis
/// elements, for every homogeneous part X_k. Requires an involution and a
/// hermitean factor.
inline bool reality_check(const EpsAlgebra& a, const Derivation& X) {
    if (!a.has_involution()) fail_validation("reality check: algebra carries no involution");
    if (!a.factor().hermitean()) fail_validation("reality check: commutation factor is not hermitean");
    for (const HomMap& part : X.parts) {
        HomMap opp = X.part_of_degree(a, a.group().neg(part.deg));
        for (size_t j = 0; j < a.dim(); ++j) {
            Vec xj = vec_zero(a.dim());
            xj[j] = CycNum(1);
            Vec lhs = a.star(part.apply(xj));
            Vec rhs = opp.apply(a.star(xj));
            for (CycNum& c : rhs) c = a.eps(a.degree(j), part.deg) * c;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace epsalg
