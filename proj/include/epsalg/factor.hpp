#pragma once

#include <optional>
#include <set>
#include <vector>

#include "epsalg/cyclotomic.hpp"
#include "epsalg/group.hpp"

namespace epsalg {

/// A commutation factor eps: Gamma x Gamma -> K* on a finitely generated
/// abelian group, determined by its values on generator pairs. The generator
/// table is validated against the three structural constraints:
///
///   (1) eps(e_r, e_s) * eps(e_s, e_r) = 1 for all r, s;
///   (2) eps(e_r, e_r) = 1 when the order of e_r is odd,
///       eps(e_r, e_r) = +-1 when it is even or infinite;
///   (3) eps(e_r, e_s)^gcd(m_r, m_s) = 1 whenever that gcd is positive.
///
/// General values extend bimultiplicatively:
/// eps(i, j) = prod_{r,s} eps(e_r, e_s)^(lambda_r mu_s).
class CommFactor {
public:
    /// Validated construction; reports the violated constraint and its (r, s).
    static CommFactor make(FinAbGroup group, std::vector<std::vector<CycNum>> gen_values,
                           bool hermitean = false) {
        const size_t k = group.rank();
        if (gen_values.size() != k) fail_validation("commutation factor: table must be rank x rank");
        for (const auto& row : gen_values)
            if (row.size() != k) fail_validation("commutation factor: table must be rank x rank");
        for (size_t r = 0; r < k; ++r)
            for (size_t s = 0; s < k; ++s)
                if (gen_values[r][s].is_zero())
                    fail_validation("commutation factor: eps(e_r,e_s) must be invertible at (" +
                                    std::to_string(r) + "," + std::to_string(s) + ")");
        for (size_t r = 0; r < k; ++r) {
            long m = group.orders()[r];
            const CycNum& d = gen_values[r][r];
            if (m % 2 == 1 && m != 0) {
                if (!d.is_one())
                    fail_validation("commutation factor: odd generator order forces eps(e_r,e_r)=1 at (" +
                                    std::to_string(r) + "," + std::to_string(r) + ")");
            } else {
                if (!(d.is_one() || d == CycNum(-1)))
                    fail_validation("commutation factor: eps(e_r,e_r) must be +-1 at (" +
                                    std::to_string(r) + "," + std::to_string(r) + ")");
            }
        }
        for (size_t r = 0; r < k; ++r)
            for (size_t s = r + 1; s < k; ++s)
                if (!(gen_values[r][s] * gen_values[s][r]).is_one())
                    fail_validation("commutation factor: eps(e_r,e_s)*eps(e_s,e_r)=1 fails at (" +
                                    std::to_string(r) + "," + std::to_string(s) + ")");
        for (size_t r = 0; r < k; ++r) {
            for (size_t s = 0; s < k; ++s) {
                long g = std::gcd(group.orders()[r], group.orders()[s]);
                if (g > 0 && !gen_values[r][s].pow(g).is_one())
                    fail_validation("commutation factor: eps(e_r,e_s)^gcd(m_r,m_s)=1 fails at (" +
                                    std::to_string(r) + "," + std::to_string(s) + ")");
            }
        }
        CommFactor f;
        f.m_group = std::move(group);
        f.m_gen = std::move(gen_values);
        f.m_hermitean = hermitean;
        if (hermitean) {
            for (size_t r = 0; r < k; ++r)
                for (size_t s = 0; s < k; ++s)
                    if (f.m_gen[r][s].conj() != f.m_gen[s][r])
                        fail_validation("commutation factor: hermitean condition conj(eps(i,j))=eps(j,i) fails at (" +
                                        std::to_string(r) + "," + std::to_string(s) + ")");
        }
        return f;
    }

    /// The factor that is identically 1.
    static CommFactor trivial(FinAbGroup group, bool hermitean = true) {
        size_t k = group.rank();
        std::vector<std::vector<CycNum>> one(k, std::vector<CycNum>(k, CycNum(1)));
        return make(std::move(group), std::move(one), hermitean);
    }

    const FinAbGroup& group() const { return m_group; }
    const std::vector<std::vector<CycNum>>& gen_values() const { return m_gen; }
    bool hermitean() const { return m_hermitean; }

    /// Bimultiplicative evaluation on reduced coordinates.
    CycNum eval(const GroupElem& i, const GroupElem& j) const {
        GroupElem a = m_group.reduce(i), b = m_group.reduce(j);
        CycNum v(1);
        for (size_t r = 0; r < m_group.rank(); ++r) {
            if (a[r] == 0) continue;
            for (size_t s = 0; s < m_group.rank(); ++s) {
                if (b[s] == 0) continue;
                v = v * m_gen[r][s].pow(a[r] * b[s]);
            }
        }
        return v;
    }

    /// Signature psi(i) = eps(i, i); always +-1.
    CycNum psi(const GroupElem& i) const { return eval(i, i); }

    /// Proper means psi is identically 1; psi is a homomorphism so checking
    /// generators suffices on any finitely generated group.
    bool proper() const {
        for (size_t r = 0; r < m_group.rank(); ++r)
            if (!psi(m_group.generator(r)).is_one()) return false;
        return true;
    }

    /// The even subgroup {i : eps(i,i) = 1}; enumerated, so finite groups only.
    std::vector<GroupElem> gamma0() const {
        std::vector<GroupElem> out;
        for (const GroupElem& g : m_group.elements())
            if (psi(g).is_one()) out.push_back(g);
        return out;
    }

    /// Signature factor s(eps): -1 on odd x odd pairs, 1 elsewhere.
    CommFactor signature_factor() const {
        size_t k = m_group.rank();
        std::vector<std::vector<CycNum>> vals(k, std::vector<CycNum>(k, CycNum(1)));
        for (size_t r = 0; r < k; ++r)
            for (size_t s = 0; s < k; ++s)
                if (!psi(m_group.generator(r)).is_one() && !psi(m_group.generator(s)).is_one())
                    vals[r][s] = CycNum(-1);
        return make(m_group, std::move(vals), m_hermitean);
    }

    /// Product factor on Gamma_1 x Gamma_2 with block-diagonal generator table.
    static CommFactor product(const CommFactor& f1, const CommFactor& f2) {
        FinAbGroup g = FinAbGroup::product(f1.m_group, f2.m_group);
        size_t k1 = f1.m_group.rank(), k = g.rank();
        std::vector<std::vector<CycNum>> vals(k, std::vector<CycNum>(k, CycNum(1)));
        for (size_t r = 0; r < k; ++r)
            for (size_t s = 0; s < k; ++s) {
                bool r1 = r < k1, s1 = s < k1;
                if (r1 && s1)
                    vals[r][s] = f1.m_gen[r][s];
                else if (!r1 && !s1)
                    vals[r][s] = f2.m_gen[r - k1][s - k1];
            }
        return make(std::move(g), std::move(vals), f1.m_hermitean && f2.m_hermitean);
    }

    friend bool operator==(const CommFactor& a, const CommFactor& b) {
        return a.m_group == b.m_group && a.m_gen == b.m_gen;
    }
    friend bool operator!=(const CommFactor& a, const CommFactor& b) { return !(a == b); }

private:
    FinAbGroup m_group;
    std::vector<std::vector<CycNum>> m_gen;
    bool m_hermitean = false;
};

/// A factor set (2-cocycle) sigma on a finite abelian group, stored as a full
/// |Gamma|^2 table and validated against
/// sigma(i, j+k) sigma(j, k) = sigma(i, j) sigma(i+j, k).
class FactorSet {
public:
    static FactorSet make(FinAbGroup group, std::vector<std::vector<CycNum>> table) {
        if (!group.finite()) fail_validation("factor set: group must be finite");
        FactorSet s;
        s.m_group = std::move(group);
        s.m_elems = s.m_group.elements();
        const size_t n = s.m_elems.size();
        if (table.size() != n) fail_validation("factor set: table must be |G| x |G|");
        for (const auto& row : table) {
            if (row.size() != n) fail_validation("factor set: table must be |G| x |G|");
            for (const CycNum& v : row)
                if (v.is_zero()) fail_validation("factor set: values must be invertible");
        }
        s.m_table = std::move(table);
        for (const GroupElem& i : s.m_elems)
            for (const GroupElem& j : s.m_elems)
                for (const GroupElem& k : s.m_elems) {
                    CycNum lhs = s.eval(i, s.m_group.add(j, k)) * s.eval(j, k);
                    CycNum rhs = s.eval(i, j) * s.eval(s.m_group.add(i, j), k);
                    if (lhs != rhs)
                        fail_validation("factor set: cocycle identity fails at (" + FinAbGroup::elem_str(i) +
                                        "," + FinAbGroup::elem_str(j) + "," + FinAbGroup::elem_str(k) + ")");
                }
        return s;
    }

    template <class Fn>
    static FactorSet from_function(const FinAbGroup& group, Fn&& fn) {
        auto elems = group.elements();
        std::vector<std::vector<CycNum>> table(elems.size(), std::vector<CycNum>(elems.size()));
        for (size_t a = 0; a < elems.size(); ++a)
            for (size_t b = 0; b < elems.size(); ++b) table[a][b] = fn(elems[a], elems[b]);
        return make(group, std::move(table));
    }

    const FinAbGroup& group() const { return m_group; }
    const std::vector<GroupElem>& elements() const { return m_elems; }

    CycNum eval(const GroupElem& i, const GroupElem& j) const {
        return m_table[m_group.elem_index(i)][m_group.elem_index(j)];
    }

private:
    FinAbGroup m_group;
    std::vector<GroupElem> m_elems;
    std::vector<std::vector<CycNum>> m_table;
};

/// The proper commutation factor eps_sigma(i,j) = sigma(i,j) / sigma(j,i)
/// attached to a factor set. The generator table is validated and the
/// bimultiplicative extension is checked against the defining quotient on
/// every pair.
inline CommFactor eps_from_sigma(const FactorSet& sigma) {
    const FinAbGroup& g = sigma.group();
    size_t k = g.rank();
    std::vector<std::vector<CycNum>> vals(k, std::vector<CycNum>(k));
    for (size_t r = 0; r < k; ++r)
        for (size_t s = 0; s < k; ++s)
            vals[r][s] = sigma.eval(g.generator(r), g.generator(s)) /
                         sigma.eval(g.generator(s), g.generator(r));
    CommFactor eps = CommFactor::make(g, std::move(vals), false);
    for (const GroupElem& i : sigma.elements())
        for (const GroupElem& j : sigma.elements())
            if (eps.eval(i, j) != sigma.eval(i, j) / sigma.eval(j, i))
                fail_validation("eps_from_sigma: quotient is not bimultiplicative at (" +
                                FinAbGroup::elem_str(i) + "," + FinAbGroup::elem_str(j) + ")");
    if (!eps.proper()) fail_validation("eps_from_sigma: quotient factor is not proper");
    return eps;
}

/// A factor set generating a given proper commutation factor on a finite
/// group: sigma(i,j) = prod_{r<s} eps(e_r,e_s)^(lambda_r mu_s) over ordered
/// generators. Inverse of eps_from_sigma up to multiplier equivalence.
inline FactorSet sigma_from_eps(const CommFactor& eps) {
    if (!eps.proper()) fail_validation("sigma_from_eps: commutation factor must be proper");
    const FinAbGroup& g = eps.group();
    if (!g.finite()) fail_validation("sigma_from_eps: group must be finite");
    return FactorSet::from_function(g, [&](const GroupElem& i, const GroupElem& j) {
        CycNum v(1);
        for (size_t r = 0; r < g.rank(); ++r)
            for (size_t s = r + 1; s < g.rank(); ++s) {
                if (i[r] == 0 || j[s] == 0) continue;
                v = v * eps.gen_values()[r][s].pow(i[r] * j[s]);
            }
        return v;
    });
}

/// Subgroup of degrees on which two factors agree against every element.
inline std::vector<GroupElem> gamma_common(const CommFactor& e1, const CommFactor& e2) {
    if (e1.group() != e2.group()) fail_validation("gamma_common: factors live on different groups");
    const FinAbGroup& g = e1.group();
    std::vector<GroupElem> out;
    for (const GroupElem& i : g.elements()) {
        bool all = true;
        for (const GroupElem& j : g.elements())
            if (e1.eval(i, j) != e2.eval(i, j)) {
                all = false;
                break;
            }
        if (all) out.push_back(i);
    }
    return out;
}

/// The set {i : eps1(i-j, j) = eps2(i-j, j) for all j}.
inline std::vector<GroupElem> r_common(const CommFactor& e1, const CommFactor& e2) {
    if (e1.group() != e2.group()) fail_validation("r_common: factors live on different groups");
    const FinAbGroup& g = e1.group();
    std::vector<GroupElem> out;
    for (const GroupElem& i : g.elements()) {
        bool all = true;
        for (const GroupElem& j : g.elements()) {
            GroupElem d = g.sub(i, j);
            if (e1.eval(d, j) != e2.eval(d, j)) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(i);
    }
    return out;
}

/// An automorphism of a finite abelian group, stored by generator images.
struct GroupAut {
    FinAbGroup group;
    std::vector<GroupElem> gen_images;

    GroupElem apply(const GroupElem& a) const {
        GroupElem v = group.zero();
        for (size_t r = 0; r < group.rank(); ++r)
            if (a[r] != 0) v = group.add(v, group.scale(a[r], gen_images[r]));
        return v;
    }
};

/// Brute-force search for an automorphism f with eps2 = eps1 (f x f).
/// Enumerates generator-image tuples that define automorphisms; feasible for
/// |Gamma| <= limit.
inline std::optional<GroupAut> equivalence_brute(const CommFactor& e1, const CommFactor& e2,
                                                 long limit = 64) {
    if (e1.group() != e2.group()) fail_validation("equivalence_brute: factors live on different groups");
    const FinAbGroup& g = e1.group();
    if (!g.finite()) fail_validation("equivalence_brute: group must be finite");
    if (g.size() > limit) fail_validation("equivalence_brute: group larger than the search bound");

    auto elems = g.elements();
    const size_t k = g.rank();
    if (k == 0) return GroupAut{g, {}};

    if (e1 == e2) {
        GroupAut id{g, {}};
        for (size_t r = 0; r < k; ++r) id.gen_images.push_back(g.generator(r));
        return id;
    }

    // candidate images per generator: elements whose order divides the
    // generator order (well-definedness of the induced endomorphism)
    std::vector<std::vector<GroupElem>> candidates(k);
    for (size_t r = 0; r < k; ++r)
        for (const GroupElem& x : elems) {
            long o = g.elem_order(x);
            if (o != 0 && g.orders()[r] % o == 0) candidates[r].push_back(x);
        }

    std::vector<size_t> pick(k, 0);
    while (true) {
        GroupAut f{g, {}};
        for (size_t r = 0; r < k; ++r) f.gen_images.push_back(candidates[r][pick[r]]);
        // bijectivity: the image of all elements must exhaust the group
        std::set<GroupElem> image;
        for (const GroupElem& x : elems) image.insert(f.apply(x));
        if (image.size() == elems.size()) {
            bool match = true;
            for (size_t r = 0; r < k && match; ++r)
                for (size_t s = 0; s < k && match; ++s)
                    if (e2.eval(g.generator(r), g.generator(s)) !=
                        e1.eval(f.gen_images[r], f.gen_images[s]))
                        match = false;
            if (match) return f;
        }
        size_t r = 0;
        for (; r < k; ++r) {
            if (++pick[r] < candidates[r].size()) break;
            pick[r] = 0;
        }
        if (r == k) break;
    }
    return std::nullopt;
}

}  // namespace epsalg
