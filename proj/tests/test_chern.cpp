#include "chcalc/chern.hpp"

#include "support/symmfn_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace chcalc;

namespace {

ChernCalculus& engine() {
    static ChernCalculus chern(18, 40);
    return chern;
}

// c2^a c4^b c6^c monomial in the BU ring
Monomial m246(int a, int b, int c) {
    return Monomial::variable(1, a) * Monomial::variable(3, b) * Monomial::variable(5, c);
}

}  // namespace

TEST_CASE("girard power sums match the formal-roots oracle", "[oracle]") {
    ChernCalculus& chern = engine();
    for (int i = 1; i <= 18; ++i) {
        INFO("i = " << i);
        CHECK(chern.power_sum(i) == testing::oracle_power_sum(chern, i));
    }
}

TEST_CASE("girard examples") {
    ChernCalculus& chern = engine();
    CHECK(chern.power_sum(1) == chern.c(1));
    CHECK(chern.power_sum(2) == chern.c(1) * chern.c(1) - chern.c(2).scaled(2));

    // s6 restricted to monomials in c2, c4, c6 only: -2 c2^3 + 6 c2 c4 - 6 c6
    MonomialFilter others = MonomialFilter::containing_vars(
        {0, 2, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17});
    GradedPoly restricted = reduce_mod(chern.power_sum(6), others);
    GradedPoly want(chern.ring());
    want.add_term(m246(3, 0, 0), Rational(-2));
    want.add_term(m246(1, 1, 0), Rational(6));
    want.add_term(m246(0, 0, 1), Rational(-6));
    CHECK(restricted == want);

    CHECK_THROWS_AS(chern.power_sum(0), std::invalid_argument);
}

TEST_CASE("newton residuals vanish for n <= 18") {
    ChernCalculus& chern = engine();
    for (int n = 1; n <= 18; ++n) {
        INFO("n = " << n);
        CHECK(chern.newton_residual(n).is_zero());
    }
}

TEST_CASE("E*c basics") {
    ChernCalculus& chern = engine();
    CHECK(chern.e_pullback_c(0) == GradedPoly::one(chern.ring()));
    CHECK(chern.e_pullback_c(1).is_zero());
    for (int n : {3, 5, 7, 9})
        CHECK(chern.e_pullback_c(n).is_zero());

    // E*c2 = c2 - 1/2 c1^2
    GradedPoly want(chern.ring());
    want.add_term(Monomial::variable(1), Rational(1));
    want.add_term(Monomial::variable(0, 2), Rational(-1, 2));
    CHECK(chern.e_pullback_c(2) == want);

    for (int n = 1; n <= 18; ++n) {
        int d = -1;
        CHECK(chern.e_pullback_c(n).is_homogeneous(&d));
        if (!chern.e_pullback_c(n).is_zero())
            CHECK(d == 2 * n);
    }
}

TEST_CASE("the nine congruence classes") {
    ChernCalculus& chern = engine();
    auto rows = chern.table();
    REQUIRE(rows.size() == 9);

    auto expect = [&](int n, std::vector<std::tuple<int, int, int, Rational>> terms) {
        GradedPoly want(chern.ring());
        for (auto& [a, b, c, q] : terms)
            want.add_term(m246(a, b, c), q);
        bool found = false;
        for (auto& [idx, poly] : rows)
            if (idx == n) {
                found = true;
                INFO("n = " << n);
                CHECK(poly == want);
            }
        CHECK(found);
    };

    expect(2, {{1, 0, 0, Rational(1)}});
    expect(4, {{2, 0, 0, Rational(1, 2)}});
    expect(6, {{0, 0, 1, Rational(1)}, {1, 1, 0, Rational(-1)}, {3, 0, 0, Rational(1, 2)}});
    expect(8, {{1, 0, 1, Rational(1)}});
    expect(10, {{0, 1, 1, Rational(-1)}, {2, 0, 1, Rational(3, 2)}});
    expect(12, {{0, 0, 2, Rational(1, 2)}});
    expect(14, {{1, 0, 2, Rational(3, 2)}});
    expect(16, {});
    expect(18, {{0, 0, 3, Rational(1, 2)}});

    CHECK(reduce_mod(chern.e_pullback_c(4), chern.table_filter()) ==
          GradedPoly::constant(chern.ring(), Rational(1, 2)) * chern.c(2) * chern.c(2));
    CHECK(reduce_mod(chern.e_pullback_c(16), chern.table_filter()).is_zero());
}

TEST_CASE("table filter drops exactly the stated monomials") {
    ChernCalculus& chern = engine();
    MonomialFilter f = chern.table_filter();
    CHECK(f.drops(Monomial::variable(0)));        // c1 odd
    CHECK(f.drops(Monomial::variable(6)));        // c7 >= 7
    CHECK(f.drops(m246(4, 0, 0)));                // p + 2q + r = 4
    CHECK(f.drops(m246(0, 2, 0)));                // 2q = 4
    CHECK(f.drops(m246(1, 1, 1)));                // 1 + 2 + 1 = 4
    CHECK(f.drops(m246(2, 1, 1)));                // 5 >= 4 (multiple of a generator)
    CHECK_FALSE(f.drops(m246(3, 0, 0)));
    CHECK_FALSE(f.drops(m246(1, 1, 0)));
    CHECK_FALSE(f.drops(m246(0, 0, 3)));

    // reduce_mod(c2 - 1/2 c1^2, odd-or-high filter) = c2
    GradedPoly p = chern.e_pullback_c(2);
    CHECK(reduce_mod(p, f) == chern.c(2));
}

TEST_CASE("degree components") {
    ChernCalculus& chern = engine();
    GradedPoly p = chern.c(2) + chern.c(2) * chern.c(2);
    CHECK(p.degree_component(8) == chern.c(2) * chern.c(2));
    CHECK(p.degree_component(4) == chern.c(2));
    CHECK(p.degree_component(6).is_zero());
    CHECK(chern.e_pullback_c(6).degree_component(12) == chern.e_pullback_c(6));
}

TEST_CASE("indecomposable coefficients") {
    ChernCalculus& chern = engine();
    for (int n = 1; n <= 18; ++n) {
        Rational want = (n % 4 == 2) ? Rational(1) : Rational(0);
        INFO("n = " << n);
        CHECK(chern.indecomposable_coefficient(n) == want);
    }
}

TEST_CASE("characterization: power sums on E*c", "[oracle]") {
    // The defining property of E, independent of the recursion.
    CHECK(engine().characterization_check(18));
}

TEST_CASE("E is idempotent up to degree 36") {
    CHECK(engine().e_idempotence_check(4));
    CHECK(engine().e_idempotence_check(20));
    CHECK(engine().e_idempotence_check(36));
}

TEST_CASE("E*c coefficients are 5-integral") {
    ChernCalculus& chern = engine();
    for (int n = 1; n <= 18; ++n)
        for (const auto& [m, c] : chern.e_pullback_c(n).terms())
            CHECK(in_zp(c, 5));
}
