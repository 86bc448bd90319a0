#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "epsalg/algebra.hpp"

namespace epsalg {

/// Span-membership solver: tracks a list of vectors and answers "write q as a
/// combination of them" with coefficients over the original list. Rows carry
/// an identity tail recording the reduction, pivoting only on the leading
/// block.
class SpanSolver {
public:
    explicit SpanSolver(size_t dim) : m_dim(dim) {}

    size_t size() const { return m_count; }

    /// Returns false when the vector is dependent on the ones already added.
    bool add_vector(const Vec& v) {
        Vec row = v;
        row.resize(m_dim + m_count + 1, CycNum(0));
        row[m_dim + m_count] = CycNum(1);
        for (size_t r = 0; r < m_rows.size(); ++r) {
            m_rows[r].resize(m_dim + m_count + 1, CycNum(0));
            const CycNum& c = row[m_pivots[r]];
            if (!c.is_zero()) vec_add_scaled(row, -c, m_rows[r]);
        }
        size_t lead = m_dim;
        for (size_t k = 0; k < m_dim; ++k)
            if (!row[k].is_zero()) {
                lead = k;
                break;
            }
        ++m_count;
        if (lead == m_dim) {
            --m_count;
            return false;
        }
        CycNum inv = row[lead].inverse();
        for (CycNum& c : row) c = c * inv;
        for (size_t r = 0; r < m_rows.size(); ++r) {
            const CycNum& c = m_rows[r][lead];
            if (!c.is_zero()) vec_add_scaled(m_rows[r], -c, row);
        }
        size_t at = 0;
        while (at < m_pivots.size() && m_pivots[at] < lead) ++at;
        m_rows.insert(m_rows.begin() + static_cast<long>(at), std::move(row));
        m_pivots.insert(m_pivots.begin() + static_cast<long>(at), lead);
        return true;
    }

    /// Coefficients c with q = sum c_u v_u, or nullopt when q is outside the span.
    std::optional<Vec> solve(const Vec& q) const {
        Vec row = q;
        row.resize(m_dim + m_count, CycNum(0));
        for (size_t r = 0; r < m_rows.size(); ++r) {
            const CycNum& c = row[m_pivots[r]];
            if (!c.is_zero()) {
                for (size_t k = 0; k < m_dim + m_count && k < m_rows[r].size(); ++k)
                    if (!m_rows[r][k].is_zero()) row[k] = row[k] - c * m_rows[r][k];
            }
        }
        for (size_t k = 0; k < m_dim; ++k)
            if (!row[k].is_zero()) return std::nullopt;
        Vec coeff(m_count);
        for (size_t u = 0; u < m_count; ++u) coeff[u] = -row[m_dim + u];
        return coeff;
    }

private:
    size_t m_dim;
    size_t m_count = 0;
    std::vector<Vec> m_rows;
    std::vector<size_t> m_pivots;
};

/// A finite list of homogeneous derivations that is free as a module over
/// the graded center and closed under the twisted bracket:
/// [X_a, X_b] = sum_c z_c . X_c with homogeneous central coefficients z_c
/// acting by (z . X)(x) = z X(x). This is the index set on which forms are
/// stored.
class DerBasis {
public:
    /// One central summand of a bracket expansion.
    struct BracketTerm {
        int member;
        GroupElem z_deg;
        Vec z;  // central coefficient, homogeneous
        bool z_is_one;
    };

    static std::shared_ptr<const DerBasis> make(std::shared_ptr<const EpsAlgebra> alg,
                                                std::vector<HomMap> members) {
        auto b = std::make_shared<DerBasis>();
        b->m_alg = std::move(alg);
        b->m_members = std::move(members);
        const EpsAlgebra& A = *b->m_alg;
        const size_t m = b->m_members.size();

        for (const HomMap& x : b->m_members)
            if (!leibniz_ok(A, x)) fail_validation("derivation basis: member fails the Leibniz rule");

        b->m_center = center(A);

        // joint freeness over the center: all z*X_c candidates independent
        SpanSolver span(A.dim() * A.dim());
        for (size_t c = 0; c < m; ++c) {
            for (const auto& [zdeg, zbasis] : b->m_center) {
                for (const Vec& z : zbasis) {
                    HomMap zx = scaled_member(A, z, b->m_members[c]);
                    if (!span.add_vector(zx.flatten()))
                        fail_validation("derivation basis: members are not free over the graded center");
                    b->m_candidates.push_back({static_cast<int>(c), zdeg, z});
                }
            }
        }

        // pairwise epsilon cache
        b->m_eps.assign(m, std::vector<CycNum>(m, CycNum(1)));
        for (size_t a = 0; a < m; ++a)
            for (size_t c = 0; c < m; ++c)
                b->m_eps[a][c] = A.eps(b->m_members[a].deg, b->m_members[c].deg);

        // bracket closure
        b->m_bracket.assign(m, std::vector<std::vector<BracketTerm>>(m));
        for (size_t a = 0; a < m; ++a)
            for (size_t c = 0; c < m; ++c) {
                HomMap f = map_bracket(A, b->m_members[a], b->m_members[c]);
                if (f.is_zero()) continue;
                auto coeff = span.solve(f.flatten());
                if (!coeff)
                    fail_validation("derivation basis: bracket of members leaves the central span");
                for (size_t u = 0; u < coeff->size(); ++u) {
                    if ((*coeff)[u].is_zero()) continue;
                    Candidate cand = b->m_candidates[u];
                    Vec z = cand.z;
                    for (CycNum& x : z) x = (*coeff)[u] * x;
                    bool is_one = z == A.unit();
                    b->m_bracket[a][c].push_back({cand.member, cand.z_deg, std::move(z), is_one});
                }
            }
        return b;
    }

    const EpsAlgebra& algebra() const { return *m_alg; }
    std::shared_ptr<const EpsAlgebra> algebra_ptr() const { return m_alg; }
    size_t size() const { return m_members.size(); }
    const HomMap& member(size_t a) const { return m_members[a]; }
    const GroupElem& member_degree(size_t a) const { return m_members[a].deg; }
    const CycNum& eps(size_t a, size_t b) const { return m_eps[a][b]; }

    /// Whether tuples may repeat this member (its diagonal factor value is -1).
    bool member_symmetric(size_t a) const {
        return m_eps[a][a] == CycNum(-1);
    }

    const std::vector<BracketTerm>& bracket(size_t a, size_t b) const { return m_bracket[a][b]; }

    const std::map<GroupElem, std::vector<Vec>>& center_basis() const { return m_center; }

    /// Scalar coefficients expressing a homogeneous map in the members.
    std::optional<Vec> expand_in_members(const HomMap& x) const {
        SpanSolver span(m_alg->dim() * m_alg->dim());
        for (const HomMap& mem : m_members) span.add_vector(mem.flatten());
        return span.solve(x.flatten());
    }

    /// Sum of member degrees of a tuple.
    GroupElem tuple_degree(const std::vector<int>& tuple) const {
        GroupElem d = m_alg->group().zero();
        for (int t : tuple) d = m_alg->group().add(d, member_degree(static_cast<size_t>(t)));
        return d;
    }

    /// Sort a tuple into canonical (non-decreasing) order, accumulating the
    /// factor -eps(d_i, d_j) per adjacent transposition. Returns nullopt when
    /// the canonical tuple repeats an antisymmetric member, i.e. the form
    /// value is forced to zero.
    std::optional<std::pair<std::vector<int>, CycNum>> canonicalize(std::vector<int> tuple) const {
        CycNum f(1);
        for (size_t i = 1; i < tuple.size(); ++i)
            for (size_t j = i; j > 0 && tuple[j] < tuple[j - 1]; --j) {
                f = f * -m_eps[static_cast<size_t>(tuple[j - 1])][static_cast<size_t>(tuple[j])];
                std::swap(tuple[j], tuple[j - 1]);
            }
        for (size_t i = 1; i < tuple.size(); ++i)
            if (tuple[i] == tuple[i - 1] && !member_symmetric(static_cast<size_t>(tuple[i])))
                return std::nullopt;
        return std::make_pair(std::move(tuple), std::move(f));
    }

    /// All canonical tuples of a given length, lexicographic.
    std::vector<std::vector<int>> canonical_tuples(size_t n) const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        enumerate(n, 0, cur, out);
        return out;
    }

private:
    struct Candidate {
        int member;
        GroupElem z_deg;
        Vec z;
    };

    std::shared_ptr<const EpsAlgebra> m_alg;
    std::vector<HomMap> m_members;
    std::map<GroupElem, std::vector<Vec>> m_center;
    std::vector<Candidate> m_candidates;
    std::vector<std::vector<CycNum>> m_eps;
    std::vector<std::vector<std::vector<BracketTerm>>> m_bracket;

    static HomMap scaled_member(const EpsAlgebra& A, const Vec& z, const HomMap& x) {
        GroupElem zdeg;
        A.is_homogeneous(z, &zdeg);
        HomMap out = HomMap::zero(A, A.group().add(zdeg, x.deg));
        for (size_t j = 0; j < A.dim(); ++j) {
            Vec img = A.mul(z, x.column(j));
            for (size_t k = 0; k < A.dim(); ++k) out.mat[k][j] = img[k];
        }
        return out;
    }

    void enumerate(size_t n, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) const {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (int t = from; t < static_cast<int>(m_members.size()); ++t) {
            if (!cur.empty() && cur.back() == t && !member_symmetric(static_cast<size_t>(t))) continue;
            cur.push_back(t);
            enumerate(n, t, cur, out);
            cur.pop_back();
        }
    }

public:
    DerBasis() = default;  // for make_shared; not meant for direct use
};

/// Derivation basis made of inner derivations: candidate ads are taken per
/// degree component and kept only when independent of the span of the
/// already-selected members over the graded center, so the result is a free
/// generating set of the inner derivations as a module over the center.
inline std::shared_ptr<const DerBasis> inner_derivation_basis(std::shared_ptr<const EpsAlgebra> alg) {
    const EpsAlgebra& A = *alg;
    auto zc = center(A);
    std::vector<HomMap> members;
    SpanSolver span(A.dim() * A.dim());
    for (const auto& [deg, idxs] : A.components()) {
        for (int p : idxs) {
            Vec e = vec_zero(A.dim());
            e[static_cast<size_t>(p)] = CycNum(1);
            HomMap m = ad_map(A, e);
            if (m.is_zero() || span.solve(m.flatten())) continue;
            // admit the member together with its central multiples
            for (const auto& [zdeg, zbasis] : zc)
                for (const Vec& z : zbasis) {
                    HomMap zm = HomMap::zero(A, A.group().add(zdeg, m.deg));
                    for (size_t j = 0; j < A.dim(); ++j) {
                        Vec img = A.mul(z, m.column(j));
                        for (size_t k = 0; k < A.dim(); ++k) zm.mat[k][j] = img[k];
                    }
                    span.add_vector(zm.flatten());
                }
            members.push_back(std::move(m));
        }
    }
    return DerBasis::make(std::move(alg), std::move(members));
}

}  // namespace epsalg
