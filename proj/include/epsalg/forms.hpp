#pragma once

#include <map>
#include <set>

#include "epsalg/der_basis.hpp"

namespace epsalg {

/// An algebra-valued multilinear form on a derivation basis: antisymmetric up
/// to the factor under adjacent swaps and multilinear over the graded center.
/// Components are stored on canonical (sorted) member tuples only; a tuple
/// repeating a member with diagonal factor +1 is identically zero, repeats of
/// members with diagonal factor -1 span the symmetric directions.
class EpsForm {
public:
    EpsForm(std::shared_ptr<const DerBasis> basis, int n, GroupElem k)
        : m_basis(std::move(basis)), m_n(n), m_k(m_basis->algebra().group().reduce(std::move(k))) {}

    const DerBasis& basis() const { return *m_basis; }
    std::shared_ptr<const DerBasis> basis_ptr() const { return m_basis; }
    int form_degree() const { return m_n; }
    const GroupElem& gamma_degree() const { return m_k; }
    const std::map<std::vector<int>, Vec>& components() const { return m_comp; }
    bool is_zero() const { return m_comp.empty(); }

    /// Degree of the component at a tuple: k + sum of member degrees.
    GroupElem component_degree(const std::vector<int>& tuple) const {
        return m_basis->algebra().group().add(m_k, m_basis->tuple_degree(tuple));
    }

    /// Install a component; the tuple is canonicalized and the value checked
    /// homogeneous of the right degree.
    void set_component(const std::vector<int>& tuple, const Vec& value) {
        if (tuple.size() != static_cast<size_t>(m_n)) fail_validation("form: tuple arity mismatch");
        auto canon = m_basis->canonicalize(tuple);
        if (!canon) {
            if (!vec_is_zero(value)) fail_validation("form: nonzero value on an alternating repeat");
            return;
        }
        Vec v = value;
        CycNum inv_f = canon->second.inverse();
        for (CycNum& c : v) c = inv_f * c;
        if (vec_is_zero(v)) {
            m_comp.erase(canon->first);
            return;
        }
        GroupElem d;
        if (!m_basis->algebra().is_homogeneous(v, &d) || d != component_degree(canon->first))
            fail_validation("form: component value is not homogeneous of the tuple degree");
        m_comp[canon->first] = std::move(v);
    }

    void add_component(const std::vector<int>& tuple, const Vec& value) {
        auto canon = m_basis->canonicalize(tuple);
        if (!canon) return;
        Vec cur = eval_canonical(canon->first);
        CycNum inv_f = canon->second.inverse();
        for (size_t k = 0; k < cur.size(); ++k) cur[k] = cur[k] + inv_f * value[k];
        if (vec_is_zero(cur))
            m_comp.erase(canon->first);
        else
            m_comp[canon->first] = std::move(cur);
    }

    /// Evaluate at an arbitrary member tuple (indices into the basis).
    Vec eval(const std::vector<int>& tuple) const {
        auto canon = m_basis->canonicalize(tuple);
        if (!canon) return vec_zero(m_basis->algebra().dim());
        Vec v = eval_canonical(canon->first);
        for (CycNum& c : v) c = canon->second * c;
        return v;
    }

    /// Evaluate with the first slot dressed by a central coefficient:
    /// omega(z . X_c, rest...). The central factor is peeled off through the
    /// last slot, where multilinearity over the center holds by definition.
    Vec eval_front_dressed(const Vec& z, const GroupElem& z_deg, bool z_is_one, int c,
                           const std::vector<int>& rest) const {
        const EpsAlgebra& A = m_basis->algebra();
        if (z_is_one) {
            std::vector<int> t;
            t.reserve(rest.size() + 1);
            t.push_back(c);
            t.insert(t.end(), rest.begin(), rest.end());
            return eval(t);
        }
        // lookup first: the undressed tuple must carry a component
        std::vector<int> plain;
        plain.reserve(rest.size() + 1);
        plain.insert(plain.end(), rest.begin(), rest.end());
        plain.push_back(c);
        auto canon = m_basis->canonicalize(plain);
        if (!canon) return vec_zero(A.dim());
        auto it = m_comp.find(canon->first);
        if (it == m_comp.end()) return vec_zero(A.dim());

        GroupElem slot_deg = A.group().add(z_deg, m_basis->member_degree(static_cast<size_t>(c)));
        CycNum f(1);
        for (int r : rest) f = f * -A.eps(slot_deg, m_basis->member_degree(static_cast<size_t>(r)));
        f = f * A.eps(z_deg, m_basis->member_degree(static_cast<size_t>(c))) * canon->second;
        Vec v = A.mul(it->second, z);
        for (CycNum& x : v) x = f * x;
        return v;
    }

    friend EpsForm operator+(const EpsForm& a, const EpsForm& b) {
        EpsForm out = a;
        for (const auto& [t, v] : b.m_comp) out.add_component(t, v);
        return out;
    }
    friend EpsForm operator-(const EpsForm& a, const EpsForm& b) {
        EpsForm out = a;
        for (const auto& [t, v] : b.m_comp) {
            Vec nv = v;
            for (CycNum& c : nv) c = -c;
            out.add_component(t, nv);
        }
        return out;
    }
    EpsForm scaled(const CycNum& s) const {
        EpsForm out(m_basis, m_n, m_k);
        if (s.is_zero()) return out;
        for (const auto& [t, v] : m_comp) {
            Vec nv = v;
            for (CycNum& c : nv) c = s * c;
            out.m_comp[t] = std::move(nv);
        }
        return out;
    }

    friend bool operator==(const EpsForm& a, const EpsForm& b) {
        return a.m_n == b.m_n && a.m_k == b.m_k && a.m_comp == b.m_comp;
    }

private:
    std::shared_ptr<const DerBasis> m_basis;
    int m_n;
    GroupElem m_k;
    std::map<std::vector<int>, Vec> m_comp;

    Vec eval_canonical(const std::vector<int>& t) const {
        auto it = m_comp.find(t);
        return it == m_comp.end() ? vec_zero(m_basis->algebra().dim()) : it->second;
    }

    friend EpsForm wedge(const EpsForm&, const EpsForm&);
    friend EpsForm differential(const EpsForm&);
    friend EpsForm inner_product(size_t, const EpsForm&);
};

/// Zero form of given bidegree.
inline EpsForm zero_form(std::shared_ptr<const DerBasis> basis, int n, GroupElem k) {
    return EpsForm(std::move(basis), n, std::move(k));
}

/// 0-form wrapping a homogeneous algebra element.
inline EpsForm form_of_element(std::shared_ptr<const DerBasis> basis, const Vec& a) {
    GroupElem d;
    if (!basis->algebra().is_homogeneous(a, &d)) fail_validation("form: element must be homogeneous");
    EpsForm f(std::move(basis), 0, d);
    f.set_component({}, a);
    return f;
}

/// Basis forms of one bidegree: single canonical tuple, single algebra basis
/// vector of the matching component degree. Deterministic order.
inline std::vector<EpsForm> form_basis(const std::shared_ptr<const DerBasis>& basis, int n,
                                       const GroupElem& k) {
    const EpsAlgebra& A = basis->algebra();
    std::vector<EpsForm> out;
    for (const auto& tuple : basis->canonical_tuples(static_cast<size_t>(n))) {
        GroupElem d = A.group().add(A.group().reduce(k), basis->tuple_degree(tuple));
        for (int p : A.basis_of_degree(d)) {
            EpsForm f(basis, n, k);
            Vec v = vec_zero(A.dim());
            v[static_cast<size_t>(p)] = CycNum(1);
            f.set_component(tuple, v);
            out.push_back(std::move(f));
        }
    }
    return out;
}

inline size_t form_space_dim(const std::shared_ptr<const DerBasis>& basis, int n, const GroupElem& k) {
    const EpsAlgebra& A = basis->algebra();
    size_t dim = 0;
    for (const auto& tuple : basis->canonical_tuples(static_cast<size_t>(n)))
        dim += A.basis_of_degree(A.group().add(A.group().reduce(k), basis->tuple_degree(tuple))).size();
    return dim;
}

/// Twisted shuffle product. The normalization 1/(p! q!) of the full
/// permutation sum is realized by summing over (p,q)-shuffles only, which is
/// the same value in characteristic zero.
inline EpsForm wedge(const EpsForm& w, const EpsForm& e) {
    if (w.basis_ptr().get() != e.basis_ptr().get()) fail_validation("wedge: forms live on different bases");
    const DerBasis& B = w.basis();
    const EpsAlgebra& A = B.algebra();
    const int p = w.form_degree(), q = e.form_degree();
    EpsForm out(w.basis_ptr(), p + q, A.group().add(w.gamma_degree(), e.gamma_degree()));

    // candidate targets: canonical merges of support pairs
    std::set<std::vector<int>> targets;
    for (const auto& [tw, vw] : w.components())
        for (const auto& [te, ve] : e.components()) {
            std::vector<int> merged = tw;
            merged.insert(merged.end(), te.begin(), te.end());
            auto canon = B.canonicalize(merged);
            if (canon) targets.insert(canon->first);
        }

    for (const std::vector<int>& T : targets) {
        const size_t total = T.size();
        Vec acc = vec_zero(A.dim());
        // iterate p-subsets of positions
        std::vector<size_t> sel(static_cast<size_t>(p));
        for (size_t i = 0; i < sel.size(); ++i) sel[i] = i;
        bool done = p == 0 && total > 0 ? false : false;
        while (true) {
            // split positions
            std::vector<int> left, right;
            std::vector<bool> in_sel(total, false);
            for (size_t s : sel) in_sel[s] = true;
            for (size_t i = 0; i < total; ++i) (in_sel[i] ? left : right).push_back(T[i]);

            // subsequences of a canonical tuple are canonical: direct lookup
            auto itw = w.m_comp.find(left);
            auto ite = e.m_comp.find(right);
            if (itw != w.m_comp.end() && ite != e.m_comp.end()) {
                CycNum f(1);
                long inversions = 0;
                for (size_t i = 0; i < total; ++i) {
                    if (in_sel[i]) continue;
                    for (size_t s : sel)
                        if (s > i) {
                            ++inversions;
                            f = f * B.eps(static_cast<size_t>(T[i]), static_cast<size_t>(T[s]));
                        }
                }
                if (inversions % 2 == 1) f = -f;
                for (size_t s : sel)
                    f = f * A.eps(e.gamma_degree(), B.member_degree(static_cast<size_t>(T[s])));
                Vec prod = A.mul(itw->second, ite->second);
                vec_add_scaled(acc, f, prod);
            }

            // next combination
            if (p == 0) break;
            long i = p - 1;
            while (i >= 0 && sel[static_cast<size_t>(i)] == total - static_cast<size_t>(p - i)) --i;
            if (i < 0) break;
            ++sel[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < static_cast<size_t>(p); ++j) sel[j] = sel[j - 1] + 1;
        }
        (void)done;
        if (!vec_is_zero(acc)) out.add_component(T, acc);
    }
    return out;
}

/// The differential. On a 0-form a it is X -> eps(|a|,|X|) X(a); in general
/// the twisted Chevalley-Eilenberg sum over slot actions and bracket
/// contractions. Squares to zero; checked exhaustively in the tests.
inline EpsForm differential(const EpsForm& w) {
    const DerBasis& B = w.basis();
    const EpsAlgebra& A = B.algebra();
    const int n = w.form_degree();
    EpsForm out(w.basis_ptr(), n + 1, w.gamma_degree());

    // candidate targets reachable from the support
    std::set<std::vector<int>> targets;
    for (const auto& [S, v] : w.components()) {
        for (int c = 0; c < static_cast<int>(B.size()); ++c) {
            std::vector<int> t = S;
            t.push_back(c);
            auto canon = B.canonicalize(t);
            if (canon) targets.insert(canon->first);
        }
        for (size_t q = 0; q < S.size(); ++q) {
            if (q > 0 && S[q] == S[q - 1]) continue;
            std::vector<int> rest;
            for (size_t i = 0; i < S.size(); ++i)
                if (i != q) rest.push_back(S[i]);
            for (size_t a = 0; a < B.size(); ++a)
                for (size_t b = 0; b < B.size(); ++b) {
                    bool hits = false;
                    for (const auto& term : B.bracket(a, b))
                        if (term.member == S[q]) hits = true;
                    if (!hits) continue;
                    std::vector<int> t = rest;
                    t.push_back(static_cast<int>(a));
                    t.push_back(static_cast<int>(b));
                    auto canon = B.canonicalize(t);
                    if (canon) targets.insert(canon->first);
                }
        }
    }

    for (const std::vector<int>& T : targets) {
        const size_t total = T.size();
        Vec acc = vec_zero(A.dim());

        // first sum: slot actions
        for (size_t m = 0; m < total; ++m) {
            std::vector<int> sub;
            for (size_t i = 0; i < total; ++i)
                if (i != m) sub.push_back(T[i]);
            auto it = w.m_comp.find(sub);
            if (it == w.m_comp.end()) continue;
            size_t xm = static_cast<size_t>(T[m]);
            CycNum f = A.eps(w.gamma_degree(), B.member_degree(xm));
            for (size_t a = 0; a < m; ++a) f = f * B.eps(static_cast<size_t>(T[a]), xm);
            if (m % 2 == 1) f = -f;
            Vec img = B.member(xm).apply(it->second);
            vec_add_scaled(acc, f, img);
        }

        // second sum: bracket contractions into the first slot
        for (size_t m = 0; m + 1 < total; ++m)
            for (size_t nn = m + 1; nn < total; ++nn) {
                size_t xm = static_cast<size_t>(T[m]), xn = static_cast<size_t>(T[nn]);
                const auto& terms = B.bracket(xm, xn);
                if (terms.empty()) continue;
                std::vector<int> rest;
                for (size_t i = 0; i < total; ++i)
                    if (i != m && i != nn) rest.push_back(T[i]);
                CycNum f = B.eps(xn, xm);
                for (size_t a = 0; a < m; ++a) f = f * B.eps(static_cast<size_t>(T[a]), xm);
                for (size_t a = 0; a < nn; ++a) f = f * B.eps(static_cast<size_t>(T[a]), xn);
                if ((m + nn + 1) % 2 == 1) f = -f;  // (-1)^(m+n) with 1-based positions
                for (const auto& term : terms) {
                    Vec v = w.eval_front_dressed(term.z, term.z_deg, term.z_is_one,
                                                 term.member, rest);
                    vec_add_scaled(acc, f, v);
                }
            }

        if (!vec_is_zero(acc)) out.add_component(T, acc);
    }
    return out;
}

/// Inner product with a basis member: prepends the slot and shifts degrees.
inline EpsForm inner_product(size_t x, const EpsForm& w) {
    const DerBasis& B = w.basis();
    const EpsAlgebra& A = B.algebra();
    if (w.form_degree() == 0) return zero_form(w.basis_ptr(), 0, w.gamma_degree());
    EpsForm out(w.basis_ptr(), w.form_degree() - 1,
                A.group().add(w.gamma_degree(), B.member_degree(x)));
    CycNum pre = A.eps(B.member_degree(x), w.gamma_degree());
    for (const auto& [S, v] : w.components()) {
        // i_X w (T) = pre * w(x, T): nonzero only when x occurs in S
        for (size_t q = 0; q < S.size(); ++q) {
            if (S[q] != static_cast<int>(x)) continue;
            if (q > 0 && S[q] == S[q - 1]) continue;  // count each value once
            std::vector<int> rest;
            for (size_t i = 0; i < S.size(); ++i)
                if (i != q) rest.push_back(S[i]);
            std::vector<int> probe;
            probe.push_back(static_cast<int>(x));
            probe.insert(probe.end(), rest.begin(), rest.end());
            Vec val = w.eval(probe);
            if (vec_is_zero(val)) continue;
            for (CycNum& c : val) c = pre * c;
            out.add_component(rest, val);
        }
    }
    return out;
}

/// Inner product with a centrally dressed member z . X_c.
inline EpsForm inner_product_dressed(const Vec& z, const GroupElem& z_deg, bool z_is_one, size_t c,
                                     const EpsForm& w) {
    const DerBasis& B = w.basis();
    const EpsAlgebra& A = B.algebra();
    GroupElem slot_deg = A.group().add(z_deg, B.member_degree(c));
    if (w.form_degree() == 0) return zero_form(w.basis_ptr(), 0, A.group().add(w.gamma_degree(), slot_deg));
    EpsForm out(w.basis_ptr(), w.form_degree() - 1, A.group().add(w.gamma_degree(), slot_deg));
    CycNum pre = A.eps(slot_deg, w.gamma_degree());
    for (const auto& [S, v] : w.components()) {
        for (size_t q = 0; q < S.size(); ++q) {
            if (S[q] != static_cast<int>(c)) continue;
            if (q > 0 && S[q] == S[q - 1]) continue;
            std::vector<int> rest;
            for (size_t i = 0; i < S.size(); ++i)
                if (i != q) rest.push_back(S[i]);
            Vec val = w.eval_front_dressed(z, z_deg, z_is_one, static_cast<int>(c), rest);
            if (vec_is_zero(val)) continue;
            for (CycNum& x : val) x = pre * x;
            out.add_component(rest, val);
        }
    }
    return out;
}

/// Inner product with the bracket [X_a, X_b] expanded over the basis.
inline EpsForm inner_product_bracket(size_t a, size_t b, const EpsForm& w) {
    const DerBasis& B = w.basis();
    const EpsAlgebra& A = B.algebra();
    GroupElem slot_deg = A.group().add(B.member_degree(a), B.member_degree(b));
    int n = w.form_degree() == 0 ? 0 : w.form_degree() - 1;
    EpsForm out(w.basis_ptr(), n, A.group().add(w.gamma_degree(), slot_deg));
    for (const auto& term : B.bracket(a, b))
        out = out + inner_product_dressed(term.z, term.z_deg, term.z_is_one,
                                          static_cast<size_t>(term.member), w);
    return out;
}

/// Lie derivative along a member: the graded commutator of the inner product
/// with the differential.
inline EpsForm lie_derivative(size_t x, const EpsForm& w) {
    return inner_product(x, differential(w)) + differential(inner_product(x, w));
}

/// Lie derivative along the bracket [X_a, X_b].
inline EpsForm lie_derivative_bracket(size_t a, size_t b, const EpsForm& w) {
    EpsForm iw = inner_product_bracket(a, b, w);
    return inner_product_bracket(a, b, differential(w)) + differential(iw);
}

/// Sparse matrix of the differential from bidegree (n, k) to (n+1, k) in the
/// deterministic form_basis orderings; entry list per source column.
struct DiffMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<size_t, CycNum>>> col_entries;
};

inline std::map<std::pair<std::vector<int>, int>, size_t> form_index_map(
    const std::shared_ptr<const DerBasis>& basis, int n, const GroupElem& k) {
    const EpsAlgebra& A = basis->algebra();
    std::map<std::pair<std::vector<int>, int>, size_t> idx;
    size_t count = 0;
    for (const auto& tuple : basis->canonical_tuples(static_cast<size_t>(n))) {
        GroupElem d = A.group().add(A.group().reduce(k), basis->tuple_degree(tuple));
        for (int p : A.basis_of_degree(d)) idx[{tuple, p}] = count++;
    }
    return idx;
}

inline DiffMatrix differential_matrix(const std::shared_ptr<const DerBasis>& basis, int n,
                                      const GroupElem& k) {
    auto src = form_basis(basis, n, k);
    auto tgt_index = form_index_map(basis, n + 1, k);
    DiffMatrix m;
    m.rows = tgt_index.size();
    m.cols = src.size();
    m.col_entries.resize(src.size());
    for (size_t c = 0; c < src.size(); ++c) {
        EpsForm d = differential(src[c]);
        for (const auto& [tuple, val] : d.components())
            for (size_t p = 0; p < val.size(); ++p)
                if (!val[p].is_zero())
                    m.col_entries[c].emplace_back(tgt_index.at({tuple, static_cast<int>(p)}), val[p]);
    }
    return m;
}

/// Ranks of the differential entering and leaving bidegree (n, k), plus the
/// cohomology dimension ker - im there.
struct CohomologyReport {
    size_t dim_n = 0;
    size_t kernel_dim = 0;
    size_t image_dim = 0;  // rank of d arriving from (n-1, k)
    size_t h_dim = 0;
};

inline CohomologyReport cohomology_dim(const std::shared_ptr<const DerBasis>& basis, int n,
                                       const GroupElem& k) {
    CohomologyReport rep;
    rep.dim_n = form_space_dim(basis, n, k);
    DiffMatrix out = differential_matrix(basis, n, k);
    RowEchelon re_out(out.rows == 0 ? 1 : out.rows);
    for (const auto& col : out.col_entries) {
        Vec v = vec_zero(out.rows == 0 ? 1 : out.rows);
        for (const auto& [r, c] : col) v[r] = c;
        re_out.add_row(std::move(v));
    }
    size_t rank_out = re_out.rank();
    rep.kernel_dim = rep.dim_n - rank_out;

    size_t rank_in = 0;
    if (n > 0) {
        DiffMatrix in = differential_matrix(basis, n - 1, k);
        RowEchelon re_in(in.rows == 0 ? 1 : in.rows);
        for (const auto& col : in.col_entries) {
            Vec v = vec_zero(in.rows == 0 ? 1 : in.rows);
            for (const auto& [r, c] : col) v[r] = c;
            re_in.add_row(std::move(v));
        }
        rank_in = re_in.rank();
    }
    rep.image_dim = rank_in;
    rep.h_dim = rep.kernel_dim - rank_in;
    return rep;
}

}  // namespace epsalg
