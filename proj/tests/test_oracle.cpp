#include <doctest.h>

#include "helpers.hpp"

using namespace annih;
using namespace annih::testhelp;

TEST_SUITE("oracle") {

TEST_CASE("brute-force minimal polynomial") {
    Field g2 = Field::gf(2);
    auto mp = brute_min_poly(golden_seq(g2), 5);
    REQUIRE(mp.has_value());
    CHECK(mp->degree() == 4);
    CHECK(*mp == poly(g2, {1, 1, 0, 0, 1}));  // x^4+x+1, found after degrees 1..3 fail

    auto one = brute_min_poly(seq(g2, {1}), 3);
    REQUIRE(one.has_value());
    CHECK(*one == poly(g2, {0, 1}));  // x

    Field g3 = Field::gf(3);
    auto g3mp = brute_min_poly(seq(g3, {1, 2, 1}), 3);
    REQUIRE(g3mp.has_value());
    CHECK(g3mp->degree() == minimal_polynomial(seq(g3, {1, 2, 1})).lc);

    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(brute_min_poly(random_sequence(Field::gf(101), rng, 8), 8),
                    SearchSpaceTooLarge);
    Sequence rational{Field::rationals(), {Field::rationals().one()}};
    CHECK_THROWS_AS(brute_min_poly(rational, 1), SearchSpaceTooLarge);

    // no annihilator below the bound
    CHECK_FALSE(brute_min_poly(seq(g2, {0, 0, 1}), 2).has_value());
}

TEST_CASE("buchberger certification") {
    Field g2 = Field::gf(2);
    AnnihilatorBasis golden = run(from_sequence(golden_seq(g2)));
    CHECK(buchberger_certify(golden.basis));

    // S(x^2+xz, z) reduces to zero against the pair itself
    CHECK(buchberger_certify({form(g2, {0, 1, 1}), Form::monomial(g2, {0, 1})}));

    // (x^2+z^2, xz) over gf3 leaves the irreducible z^3
    Field g3 = Field::gf(3);
    CHECK_FALSE(buchberger_certify({form(g3, {1, 0, 1}), Form::monomial(g3, {1, 1})}));
}

TEST_CASE("staircase counting") {
    Field g2 = Field::gf(2);
    AnnihilatorBasis golden = run(from_sequence(golden_seq(g2)));
    CHECK(staircase_dim_count(golden.basis) == 20);

    CHECK(staircase_dim_count({Form::monomial(g2, {1, 0}), Form::monomial(g2, {0, 1})}) == 1);

    CHECK_THROWS_AS(staircase_dim_count({Form::monomial(g2, {2, 0}), Form::monomial(g2, {1, 1})}),
                    InfiniteStaircase);
}

TEST_CASE("classical synthesis") {
    Field g2 = Field::gf(2);
    ClassicalBm golden = classical_bm(golden_seq(g2));
    CHECK(golden.lc == 4);
    CHECK(annihilating_poly(golden.poly, golden_seq(g2)));
    CHECK(golden.poly.is_monic());

    CHECK(classical_bm(seq(g2, {1})).lc == 1);
    CHECK(classical_bm(seq(g2, {0, 0, 1})).lc == 3);
}

TEST_CASE("power ideal containment") {
    Field g2 = Field::gf(2);
    CHECK(power_ideal_check(from_sequence(golden_seq(g2))));
    CHECK(power_ideal_check(InverseForm(g2, 0, {fe(g2, 1)})));

    std::mt19937_64 rng(67);
    Field g5 = Field::gf(5);
    for (int it = 0; it < 60; ++it)
        CHECK(power_ideal_check(from_sequence(random_sequence(g5, rng, 1 + static_cast<int>(rng() % 12)))));
}

TEST_CASE("minimal basis certification") {
    Field g2 = Field::gf(2);
    InverseForm F = from_sequence(golden_seq(g2));
    CHECK(minimal_gb_check(run(F).basis, F));

    InverseForm one(g2, 0, {fe(g2, 1)});
    CHECK_FALSE(minimal_gb_check({Form::monomial(g2, {1, 0}), Form::monomial(g2, {2, 0})}, one));
}

TEST_CASE("interreduction reaches the unique reduced basis") {
    std::mt19937_64 rng(71);
    for (const Field& k : {Field::gf(2), Field::gf(3), Field::gf(101)}) {
        for (int it = 0; it < 120; ++it) {
            Sequence s = random_sequence(k, rng, 1 + static_cast<int>(rng() % 16));
            InverseForm F = from_sequence(s);
            AnnihilatorBasis minimal = run(F);
            AnnihilatorBasis reduced = run(F, RunOptions{true, false, true});
            std::vector<Form> textbook = full_reduce(minimal.basis);
            REQUIRE(reduced.basis == textbook);
            REQUIRE(fully_reduced(reduced.basis));
            REQUIRE(reduced.reduced);
            REQUIRE(is_reduced(reduced) == fully_reduced(reduced.basis));
            REQUIRE(minimal_gb_check(reduced.basis, F));
            // agreement of the fast reducedness path with the definition
            REQUIRE(is_reduced(minimal) == fully_reduced(minimal.basis));
            if (2 * minimal.lambda <= 2 - minimal.m) REQUIRE(fully_reduced(minimal.basis));
        }
    }
}

TEST_CASE("annihilating polynomial census") {
    Field g2 = Field::gf(2);
    Sequence s = golden_seq(g2);
    AnnihilatorBasis basis = run(from_sequence(s));
    CHECK(count_monic_annihilating_polys(s, 4) == 1);
    CHECK(count_monic_annihilating_polys(s, 3) == 0);
    CHECK(count_z_divisible_annihilators(from_sequence(s), basis.f2().degree()) >= 2);
}

TEST_CASE("whole battery on reference and random inputs") {
    Field g2 = Field::gf(2);
    VerificationReport report = verify_instance(golden_seq(g2));
    CHECK(report.passed);
    for (const Check& c : report.checks) {
        CAPTURE(c.name);
        CHECK(c.passed);
    }
    CHECK(report.checks.size() >= 12);

    std::mt19937_64 rng(73);
    for (const Field& k : {Field::gf(3), Field::gf(101), Field::rationals()}) {
        for (int it = 0; it < 12; ++it) {
            Sequence s = random_sequence(k, rng, 1 + static_cast<int>(rng() % 10));
            VerificationReport r = verify_instance(s);
            CAPTURE(k.name());
            CHECK(r.passed);
        }
    }
}

}  // TEST_SUITE
