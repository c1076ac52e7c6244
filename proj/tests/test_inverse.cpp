#include <doctest.h>

#include "helpers.hpp"

using namespace annih;
using namespace annih::testhelp;

namespace {

InverseForm inverse(const Field& k, int m, const std::vector<long long>& asc) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(asc.size());
    for (long long v : asc) coeffs.push_back(k.from_int(v));
    return InverseForm(k, m, std::move(coeffs));
}

}  // namespace

TEST_SUITE("inverse") {

TEST_CASE("construction guards") {
    Field g2 = Field::gf(2);
    CHECK_THROWS_AS(inverse(g2, -1, {0, 0}), ZeroForm);
    CHECK_THROWS_AS(inverse(g2, -1, {1}), ZeroForm);  // wrong length
    CHECK_THROWS_AS(inverse(g2, 1, {1, 1}), ZeroForm);
    CHECK(inverse(g2, 0, {1}).total_degree() == 0);
}

TEST_CASE("sequence to inverse form") {
    Field g2 = Field::gf(2);
    InverseForm F = from_sequence(golden_seq(g2));
    CHECK(F.total_degree() == -7);
    // x^-6 z^-1 + x^-4 z^-3 + x^-3 z^-4 + z^-7, stored bottom-up
    CHECK(F == inverse(g2, -7, {0, 1, 0, 1, 1, 0, 0, 1}));
    CHECK(F.coeff(-6) == fe(g2, 1));
    CHECK(F.coeff(-7) == fe(g2, 0));
    CHECK(F.coeff(0) == fe(g2, 1));
    CHECK(to_display(F) == "z^-7+x^-3*z^-4+x^-4*z^-3+x^-6*z^-1");

    CHECK(from_sequence(seq(g2, {1})) == inverse(g2, 0, {1}));

    InverseForm tail = from_sequence(seq(g2, {0, 0, 1}));
    CHECK(tail.total_degree() == -2);
    CHECK(tail == inverse(g2, -2, {1, 0, 0}));  // x^-2 alone
    CHECK(tail.order() == -2);

    CHECK_THROWS_AS(from_sequence(seq(g2, {0, 0, 0})), AllZeroSequence);
}

TEST_CASE("order") {
    Field g2 = Field::gf(2);
    CHECK(order(from_sequence(golden_seq(g2))) == 0);
    CHECK(order(InverseForm::x_power(g2, fe(g2, 1), -4)) == -4);
    CHECK(order(from_sequence(seq(g2, {0, 0, 1}))) == -2);
    CHECK(inverse(g2, -2, {1, 1, 0}).order() == -1);
}

TEST_CASE("augmentation") {
    Field g5 = Field::gf(5);
    // a against z^m: a x^(m-1) + z^(m-1)
    InverseForm zm = inverse(g5, -1, {0, 1});  // z^-1
    CHECK(augment(fe(g5, 3), zm) == inverse(g5, -2, {3, 0, 1}));

    Field g2 = Field::gf(2);
    CHECK(augment(g2.zero(), inverse(g2, 0, {1})) == inverse(g2, -1, {0, 1}));  // 0 against 1 = z^-1
    CHECK(augment(fe(g2, 1), inverse(g2, -1, {0, 1})) == inverse(g2, -2, {1, 0, 1}));  // x^-2+z^-2
}

TEST_CASE("subforms") {
    Field g2 = Field::gf(2);
    InverseForm F = from_sequence(golden_seq(g2));
    CHECK(subform(F, -3) == inverse(g2, -3, {1, 0, 0, 1}));  // x^-3+z^-3
    CHECK(subform(F, F.order()) == inverse(g2, 0, {1}));     // x^v at the top
    CHECK(subform(F, F.total_degree()) == F);
    CHECK_THROWS_AS(subform(F, -8), IndexOutOfRange);
    CHECK_THROWS_AS(subform(F, 1), IndexOutOfRange);

    // rebuilt from the top by repeated augmentation
    InverseForm acc = inverse(g2, 0, {1});
    for (int i = -1; i >= F.total_degree(); --i) {
        acc = augment(F.coeff(i), acc);
        CHECK(acc == subform(F, i));
    }
}

TEST_CASE("contraction") {
    Field g2 = Field::gf(2);
    Form x = Form::monomial(g2, {1, 0});
    InverseForm xinv = InverseForm::x_power(g2, fe(g2, 1), -1);
    auto r = contract(x, xinv);
    REQUIRE(r.has_value());
    CHECK(*r == inverse(g2, 0, {1}));
    CHECK_FALSE(contract(Form::monomial(g2, {2, 0}), xinv).has_value());

    Field g5 = Field::gf(5);
    Form f(g5, 1, {fe(g5, 2), fe(g5, 1)});                 // x + 2z
    InverseForm F(g5, -1, {fe(g5, 1), fe(g5, 2)});         // x^-1 + 2z^-1
    CHECK_FALSE(contract(f, F).has_value());               // 1*1 + 2*2 = 5 = 0
}

TEST_CASE("annihilation on the reference form") {
    Field g2 = Field::gf(2);
    InverseForm F = from_sequence(golden_seq(g2));
    CHECK(annihilates(form(g2, {1, 1, 0, 0, 1}), F));  // x^4+x*z^3+z^4
    std::vector<long long> z8(9, 0);
    z8[0] = 1;
    CHECK(annihilates(form(g2, z8), F));               // z^8
    CHECK_FALSE(annihilates(Form::monomial(g2, {1, 0}), F));
}

TEST_CASE("contraction properties") {
    std::mt19937_64 rng(31);
    for (const Field& k : {Field::gf(2), Field::gf(3), Field::gf(101)}) {
        for (int it = 0; it < 250; ++it) {
            int n = 1 + static_cast<int>(rng() % 8);
            Sequence s = random_sequence(k, rng, n);
            InverseForm F = from_sequence(s);
            FieldElement a = random_element(k, rng);
            InverseForm G = augment(a, F);

            // the z action undoes augmentation
            auto peeled = contract(Form::monomial(k, {0, 1}), G);
            REQUIRE(peeled.has_value());
            REQUIRE(*peeled == F);

            // z-divisible forms annihilate G exactly when their cofactor
            // annihilates F
            Form psi = random_form(k, rng, static_cast<int>(rng() % 4));
            REQUIRE(annihilates(mul_z(psi, 1), G) == annihilates(psi, F));

            // contraction against G splits into the discrepancy term plus
            // the shifted contraction against F
            Form phi = random_form(k, rng, static_cast<int>(rng() % (n + 2)));
            int d = phi.degree() + G.total_degree();
            if (d <= 0) {
                FieldElement delta = discrepancy(phi, G);
                auto whole = contract(phi, G);
                auto tail = contract(phi, F);
                for (int j = d; j <= 0; ++j) {
                    FieldElement expected = j == d ? delta : k.zero();
                    if (tail && j > d) expected += tail->coeff(j);
                    FieldElement got = whole ? whole->coeff(j) : k.zero();
                    REQUIRE(got == expected);
                }
            }

            // positive total degree kills every contraction
            Form big = random_form(k, rng, n + static_cast<int>(rng() % 3));
            REQUIRE_FALSE(contract(big, F).has_value());

            // sequence round trip
            Sequence back = to_sequence(F);
            REQUIRE(back.terms == s.terms);
            REQUIRE(F.order() == -s.valuation());
        }
    }
}

TEST_CASE("annihilator ideal closure") {
    std::mt19937_64 rng(37);
    for (const Field& k : {Field::gf(2), Field::gf(5)}) {
        for (int it = 0; it < 50; ++it) {
            Sequence s = random_sequence(k, rng, 2 + static_cast<int>(rng() % 8));
            InverseForm F = from_sequence(s);
            AnnihilatorBasis basis = run(F);
            for (const Form& g : basis.basis) {
                REQUIRE(annihilates(g, F));
                REQUIRE(annihilates(mul_x(g, 1), F));
                REQUIRE(annihilates(mul_z(g, 1), F));
                REQUIRE(annihilates(mul(g, random_form(k, rng, 2)), F));
            }
        }
    }
}

TEST_CASE("min exponent follows the inverse grlex order") {
    Field g2 = Field::gf(2);
    InverseForm F = from_sequence(golden_seq(g2));
    CHECK(F.min_exponent() == std::pair<int, int>{-6, -1});
    CHECK(inverse(g2, -2, {1, 0, 0}).min_exponent() == std::pair<int, int>{-2, 0});
}

}  // TEST_SUITE
