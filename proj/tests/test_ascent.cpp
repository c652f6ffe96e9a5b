#include "monoidlab/ascent.hpp"

#include "monoidlab/parser.hpp"
#include "monoidlab/rng.hpp"

#include <doctest.h>

using namespace monoidlab;

TEST_CASE("integer polynomial basics") {
    IntPoly f = parse_int_poly("2*x^2 + 2*x");
    CHECK(f.degree() == 2);
    CHECK(f.content() == 2);
    CHECK(f.eval(BigInt(3)) == 24);
    CHECK(parse_int_poly("x^2 - 1") * parse_int_poly("x + 2") ==
          parse_int_poly("x^3 + 2*x^2 - x - 2"));
    CHECK(int_poly_divexact(parse_int_poly("x^2 - 1"), parse_int_poly("x - 1")).value() ==
          parse_int_poly("x + 1"));
    CHECK_FALSE(int_poly_divexact(parse_int_poly("x^2 + 1"), parse_int_poly("x - 1")).has_value());
}

TEST_CASE("kronecker_factor finds proper factors") {
    auto factor = kronecker_factor(parse_int_poly("x^2 - 1"));
    REQUIRE(factor.has_value());
    CHECK(int_poly_divexact(parse_int_poly("x^2 - 1"), *factor).has_value());

    CHECK_FALSE(kronecker_factor(parse_int_poly("x^2 + 1")).has_value());
    CHECK_FALSE(kronecker_factor(parse_int_poly("x^2 + x + 1")).has_value());
    CHECK_FALSE(kronecker_factor(parse_int_poly("x^4 + 1")).has_value());
    CHECK_FALSE(kronecker_factor(parse_int_poly("2*x + 2")).has_value());  // content is not a split

    auto quartic = kronecker_factor(parse_int_poly("x^4 + 2*x^3 + 3*x^2 + 2*x + 1"));
    REQUIRE(quartic.has_value());  // (x^2 + x + 1)^2

    CHECK_THROWS_AS(kronecker_factor(parse_int_poly("x^5 + x + 1")), std::domain_error);
}

TEST_CASE("indecomposable over Z ignores constants") {
    CHECK(indecomposable(parse_int_poly("2*x")));
    CHECK(indecomposable(parse_int_poly("x^2 + 1")));
    CHECK_FALSE(indecomposable(parse_int_poly("x^2 - 1")));
    CHECK_FALSE(indecomposable(parse_int_poly("x^2")));
    CHECK_THROWS_AS(indecomposable(IntPoly::constant(BigInt(4))), std::domain_error);
}

TEST_CASE("kronecker agrees with products of random factors") {
    Rng rng(73);
    for (int i = 0; i < 120; ++i) {
        // build a known-decomposable quartic or cubic
        int d1 = static_cast<int>(rng.int_in(1, 2));
        int d2 = static_cast<int>(rng.int_in(1, 2));
        std::vector<BigInt> c1(static_cast<std::size_t>(d1) + 1);
        std::vector<BigInt> c2(static_cast<std::size_t>(d2) + 1);
        for (auto& c : c1) c = BigInt(rng.int_in(-4, 4));
        for (auto& c : c2) c = BigInt(rng.int_in(-4, 4));
        if (c1.back() == 0) c1.back() = 1;
        if (c2.back() == 0) c2.back() = 1;
        IntPoly product = IntPoly(c1) * IntPoly(c2);
        CHECK_FALSE(indecomposable(product));
    }
}

TEST_CASE("ascent factorization over Z on the worked instances") {
    AscentResultZ two_x2 = ascent_factorization(parse_int_poly("2*x^2 + 2*x"));
    CHECK(two_x2.constant == 2);
    REQUIRE(two_x2.atoms.size() == 2);
    CHECK(two_x2.atoms[0] == parse_int_poly("x"));
    CHECK(two_x2.atoms[1] == parse_int_poly("x + 1"));

    AscentResultZ just_x = ascent_factorization(parse_int_poly("x"));
    CHECK(just_x.constant == 1);
    REQUIRE(just_x.atoms.size() == 1);
    CHECK(just_x.atoms[0] == parse_int_poly("x"));

    CHECK_THROWS_AS(ascent_factorization(parse_int_poly("5")), std::domain_error);
}

TEST_CASE("ascent factorization over F_p on the worked instances") {
    AscentResultFp self = ascent_factorization(parse_fp_poly("x^6+x^3+1", 2));
    CHECK(self.unit == 1);
    REQUIRE(self.atoms.size() == 1);
    CHECK(self.atoms[0] == parse_fp_poly("x^6+x^3+1", 2));

    AscentResultFp split = ascent_factorization(parse_fp_poly("2*x^2 + 2*x", 3));
    CHECK(split.unit == 2);
    REQUIRE(split.atoms.size() == 2);
    FpPoly rebuilt = FpPoly::constant(3, split.unit);
    for (const FpPoly& atom : split.atoms) rebuilt = rebuilt * atom;
    CHECK(rebuilt == parse_fp_poly("2*x^2 + 2*x", 3));
}

TEST_CASE("ascent reassembles and emits primitive indecomposables on random input") {
    Rng rng(79);
    for (int i = 0; i < 100; ++i) {
        std::vector<BigInt> coeffs(static_cast<std::size_t>(rng.int_in(2, 5)));
        for (auto& c : coeffs) c = BigInt(rng.int_in(-10, 10));
        IntPoly f(std::move(coeffs));
        if (f.degree() < 1) continue;
        AscentResultZ result = ascent_factorization(f);
        IntPoly rebuilt = IntPoly::constant(result.constant);
        for (const IntPoly& atom : result.atoms) rebuilt = rebuilt * atom;
        CHECK(rebuilt == f);
        for (const IntPoly& atom : result.atoms) {
            CHECK(atom.content() == 1);
            CHECK(indecomposable(atom));
        }
    }
}
