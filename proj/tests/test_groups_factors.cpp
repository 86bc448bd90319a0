#include <catch2/catch_amalgamated.hpp>

#include "epsalg/factor.hpp"

#include <random>

using namespace epsalg;

namespace {

constexpr int kN = 4;

CycNum cyc_i() { return CycNum::imaginary_unit(kN); }
CycNum sign_pow(long e) { return e % 2 == 0 ? CycNum(1) : CycNum(-1); }

CommFactor z2_natural() {
    return CommFactor::make(FinAbGroup({2}), {{CycNum(-1)}}, true);
}

// eps(j,k) = (-1)^(j1 k2 + j2 k1) on Z2 x Z2 (the proper "color" factor)
CommFactor z22_color() {
    return CommFactor::make(FinAbGroup({2, 2}),
                            {{CycNum(1), CycNum(-1)}, {CycNum(-1), CycNum(1)}}, true);
}

// eps(j,k) = (-1)^(j1 k1 + j2 k2) on Z2 x Z2 (the "super" variant)
CommFactor z22_super() {
    return CommFactor::make(FinAbGroup({2, 2}),
                            {{CycNum(-1), CycNum(1)}, {CycNum(1), CycNum(-1)}}, true);
}

// The factor set of the Pauli basis: sigma((1,0),(0,1)) = i and companions,
// completed by sigma(a,a) = 1 (each basis square is the unit) and trivial
// values against 0.
FactorSet pauli_sigma() {
    FinAbGroup g({2, 2});
    GroupElem t1{1, 0}, t2{0, 1}, t3{1, 1};
    std::map<std::pair<GroupElem, GroupElem>, CycNum> nontrivial = {
        {{t1, t2}, cyc_i()},  {{t2, t1}, -cyc_i()}, {{t1, t3}, -cyc_i()},
        {{t3, t1}, cyc_i()},  {{t2, t3}, cyc_i()},  {{t3, t2}, -cyc_i()},
    };
    return FactorSet::from_function(g, [&](const GroupElem& a, const GroupElem& b) {
        auto it = nontrivial.find({a, b});
        return it == nontrivial.end() ? CycNum(1) : it->second;
    });
}

GroupElem rand_elem(std::mt19937_64& rng, const FinAbGroup& g) {
    GroupElem v(g.rank());
    for (size_t r = 0; r < g.rank(); ++r) {
        long m = g.orders()[r];
        v[r] = m == 0 ? static_cast<long>(rng() % 9) - 4 : static_cast<long>(rng() % static_cast<unsigned long>(m));
    }
    return g.reduce(v);
}

void check_axioms(const CommFactor& f, std::mt19937_64& rng, int trials) {
    const FinAbGroup& g = f.group();
    for (int t = 0; t < trials; ++t) {
        GroupElem i = rand_elem(rng, g), j = rand_elem(rng, g), k = rand_elem(rng, g);
        REQUIRE(f.eval(i, j) * f.eval(j, i) == CycNum(1));
        REQUIRE(f.eval(i, g.add(j, k)) == f.eval(i, j) * f.eval(i, k));
        REQUIRE(f.eval(g.add(i, j), k) == f.eval(i, k) * f.eval(j, k));
    }
}

}  // namespace

TEST_CASE("group parsing and arithmetic") {
    FinAbGroup g = FinAbGroup::parse("Z2xZ2");
    CHECK(g.orders() == std::vector<long>({2, 2}));
    CHECK(g.size() == 4);
    CHECK(FinAbGroup::parse("Z").finite() == false);
    CHECK(FinAbGroup::parse("Z3xZ").str() == "Z3xZ");
    CHECK_THROWS_AS(FinAbGroup::parse("Q8"), Error);

    CHECK(g.add({1, 1}, {1, 0}) == GroupElem{0, 1});
    CHECK(g.neg({1, 0}) == GroupElem{1, 0});
    CHECK(g.elements().size() == 4);
    CHECK(FinAbGroup({3}).elem_order({2}) == 3);
    CHECK(FinAbGroup({0}).elem_order({2}) == 0);
}

TEST_CASE("factor construction constraints") {
    CHECK_NOTHROW(z2_natural());
    CHECK_THROWS_WITH(CommFactor::make(FinAbGroup({2}), {{cyc_i()}}),
                      Catch::Matchers::ContainsSubstring("+-1"));
    CHECK_THROWS_WITH(CommFactor::make(FinAbGroup({3}), {{CycNum::root_of_unity(12, 3)}}),
                      Catch::Matchers::ContainsSubstring("odd generator order"));
    // gcd constraint: on Z2, -1 passes, a 4th root does not
    CHECK_THROWS_AS(CommFactor::make(FinAbGroup({2, 4}),
                                     {{CycNum(1), cyc_i()}, {-cyc_i(), CycNum(1)}}),
                    Error);
    // Z x Z admits arbitrary invertible values off the diagonal
    CHECK_NOTHROW(CommFactor::make(FinAbGroup({0, 0}),
                                   {{CycNum(1), CycNum(2)}, {CycNum(Rat(1, 2)), CycNum(1)}}));
}

TEST_CASE("factor evaluation") {
    CommFactor color = z22_color(), super = z22_super();
    CHECK(color.eval({1, 0}, {0, 1}) == CycNum(-1));
    CHECK(color.eval({0, 0}, {1, 1}) == CycNum(1));
    CHECK(super.eval({1, 1}, {1, 1}) == CycNum(1));

    // bilinear extension matches the closed forms on the whole group
    for (const GroupElem& j : color.group().elements())
        for (const GroupElem& k : color.group().elements()) {
            CHECK(color.eval(j, k) == sign_pow(j[0] * k[1] + j[1] * k[0]));
            CHECK(super.eval(j, k) == sign_pow(j[0] * k[0] + j[1] * k[1]));
        }
}

TEST_CASE("signature, properness, gamma0") {
    CommFactor nat = z2_natural();
    CHECK_FALSE(nat.proper());
    CHECK(nat.gamma0() == std::vector<GroupElem>{{0}});

    CHECK(z22_color().proper());
    CHECK_FALSE(z22_super().proper());

    // non-proper factor: gamma0 has index 2
    CommFactor sup = z22_super();
    CHECK(sup.gamma0().size() == 2);

    // signature factor of a trivial factor is trivial
    CommFactor triv = CommFactor::trivial(FinAbGroup({2, 2}));
    CHECK(triv.signature_factor() == triv);
    // s(eps) of the natural Z2 factor is the factor itself
    CHECK(nat.signature_factor() == nat);
}

TEST_CASE("product factor") {
    CommFactor t2 = CommFactor::trivial(FinAbGroup({2}));
    CHECK(CommFactor::product(t2, t2) == CommFactor::trivial(FinAbGroup({2, 2})));

    // natural factor on Z times natural factor on Z2
    CommFactor zn = CommFactor::make(FinAbGroup({0}), {{CycNum(-1)}}, true);
    CommFactor prod = CommFactor::product(zn, z2_natural());
    for (long p : {0L, 1L, 2L, 3L})
        for (long i : {0L, 1L})
            for (long q : {0L, 1L, 2L})
                for (long j : {0L, 1L})
                    CHECK(prod.eval({p, i}, {q, j}) == sign_pow(p * q + i * j));

    CHECK(CommFactor::product(z2_natural(), z2_natural()).eval({1, 1}, {1, 1}) == CycNum(1));
}

TEST_CASE("eps_from_sigma on the Pauli factor set") {
    FactorSet sigma = pauli_sigma();
    CommFactor eps = eps_from_sigma(sigma);
    CHECK(eps.proper());
    for (const GroupElem& j : eps.group().elements())
        for (const GroupElem& k : eps.group().elements())
            CHECK(eps.eval(j, k) == sign_pow(j[0] * k[1] + j[1] * k[0]));
    CHECK(eps == z22_color());
}

TEST_CASE("eps_from_sigma on symmetric and Clifford factor sets") {
    FinAbGroup g({2, 2});
    FactorSet sym = FactorSet::from_function(g, [](const GroupElem&, const GroupElem&) { return CycNum(1); });
    CHECK(eps_from_sigma(sym) == CommFactor::trivial(g, false));

    FactorSet cliff = FactorSet::from_function(g, [](const GroupElem& i, const GroupElem& j) {
        return sign_pow(i[0] * j[1]);
    });
    CommFactor eps = eps_from_sigma(cliff);
    CHECK(eps.eval({1, 0}, {0, 1}) == CycNum(-1));
}

TEST_CASE("sigma_from_eps roundtrip") {
    // specific values of the r < s product formula
    CommFactor eps = z22_color();
    FactorSet sigma = sigma_from_eps(eps);
    CHECK(sigma.eval({1, 0}, {0, 1}) == CycNum(-1));
    CHECK(sigma.eval({0, 1}, {1, 0}) == CycNum(1));
    CHECK(eps_from_sigma(sigma) == eps);

    CommFactor triv = CommFactor::trivial(FinAbGroup({2, 2}), false);
    FactorSet ts = sigma_from_eps(triv);
    for (const GroupElem& i : ts.elements())
        for (const GroupElem& j : ts.elements()) CHECK(ts.eval(i, j).is_one());

    CHECK_THROWS_AS(sigma_from_eps(z2_natural()), Error);

    // exhaustive roundtrip over every proper factor on Z2 x Z2:
    // diagonal forced to 1, off-diagonal +-1 with eps(e2,e1) = eps(e1,e2)^-1
    for (int v : {1, -1}) {
        CommFactor f = CommFactor::make(FinAbGroup({2, 2}),
                                        {{CycNum(1), CycNum(v)}, {CycNum(v), CycNum(1)}});
        CHECK(eps_from_sigma(sigma_from_eps(f)) == f);
    }
}

TEST_CASE("gamma_common and r_common") {
    CommFactor eps = z22_super(), eps_sigma = z22_color();
    auto gc = gamma_common(eps, eps_sigma);
    CHECK(gc == std::vector<GroupElem>{{0, 0}, {1, 1}});
    auto rc = r_common(eps, eps_sigma);
    CHECK(rc == std::vector<GroupElem>{{1, 0}, {0, 1}});
    CHECK(gamma_common(eps, eps).size() == 4);

    // structural properties of the R set on a few pairs
    auto check_rset = [](const CommFactor& e1, const CommFactor& e2) {
        const FinAbGroup& g = e1.group();
        auto R = r_common(e1, e2);
        auto G = gamma_common(e1, e2);
        auto in = [&](const std::vector<GroupElem>& set, const GroupElem& x) {
            return std::find(set.begin(), set.end(), x) != set.end();
        };
        for (const GroupElem& i : R) CHECK(in(R, g.neg(i)));
        for (const GroupElem& i : R)
            for (const GroupElem& j : R) CHECK(in(G, g.add(i, j)));
        bool same_psi = true;
        for (const GroupElem& x : g.elements())
            if (e1.psi(x) != e2.psi(x)) same_psi = false;
        if (same_psi) {
            CHECK(R == G);
        } else {
            for (const GroupElem& i : R) CHECK_FALSE(in(G, i));
        }
    };
    check_rset(eps, eps_sigma);
    check_rset(eps_sigma, eps_sigma);
    check_rset(z2_natural(), CommFactor::trivial(FinAbGroup({2})));
}

TEST_CASE("brute-force equivalence") {
    CommFactor color = z22_color();
    auto id = equivalence_brute(color, color);
    REQUIRE(id.has_value());
    for (const GroupElem& x : color.group().elements()) CHECK(id->apply(x) == x);

    // (-1)^(j1 k1) vs (-1)^(j2 k2): related by swapping the generators
    CommFactor a = CommFactor::make(FinAbGroup({2, 2}),
                                    {{CycNum(-1), CycNum(1)}, {CycNum(1), CycNum(1)}});
    CommFactor b = CommFactor::make(FinAbGroup({2, 2}),
                                    {{CycNum(1), CycNum(1)}, {CycNum(1), CycNum(-1)}});
    auto f = equivalence_brute(a, b);
    REQUIRE(f.has_value());
    for (const GroupElem& i : a.group().elements())
        for (const GroupElem& j : a.group().elements())
            CHECK(b.eval(i, j) == a.eval(f->apply(i), f->apply(j)));

    // properness is an invariant, so these cannot be equivalent
    CHECK_FALSE(equivalence_brute(CommFactor::trivial(FinAbGroup({2})), z2_natural()).has_value());
}

TEST_CASE("factor axioms on random triples") {
    std::mt19937_64 rng(21);
    check_axioms(CommFactor::trivial(FinAbGroup({2, 2})), rng, 250);
    check_axioms(z2_natural(), rng, 250);
    check_axioms(z22_color(), rng, 250);
    check_axioms(z22_super(), rng, 250);
    CommFactor zn = CommFactor::make(FinAbGroup({0}), {{CycNum(-1)}}, true);
    check_axioms(CommFactor::product(zn, z2_natural()), rng, 250);
}
