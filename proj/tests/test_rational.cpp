#include "monoidlab/rational.hpp"
#include "monoidlab/rng.hpp"

#include <doctest.h>

using namespace monoidlab;

TEST_CASE("make_rational reduces to lowest terms with a positive denominator") {
    CHECK(make_rational(2, 4) == Rational(1, 2));
    CHECK(make_rational(0, 5).str() == "0");
    CHECK(make_rational(0, 5).den() == 1);
    CHECK(make_rational(34, 144).str() == "17/72");
    CHECK(make_rational(3, -6) == Rational(-1, 2));
    CHECK(make_rational(-3, -6) == Rational(1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("padic_valuation splits into numerator and denominator parts") {
    CHECK(padic_valuation(Rational(1, 2), 2) == -1);
    CHECK(padic_valuation(Rational(18), 3) == 2);
    CHECK(padic_valuation(Rational(17, 72), 5) == 0);
    CHECK(padic_valuation(Rational(-8), 2) == 3);
    CHECK_THROWS_AS(padic_valuation(Rational(0), 2), std::domain_error);
    CHECK_THROWS_AS(padic_valuation(Rational(1), 4), std::domain_error);
}

TEST_CASE("padic_valuation is additive on products") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a(rng.int_in(1, 300), rng.int_in(1, 300));
        Rational b(rng.int_in(1, 300), rng.int_in(1, 300));
        for (long long p : {2, 3, 5, 7}) {
            CHECK(padic_valuation(a * b, p) == padic_valuation(a, p) + padic_valuation(b, p));
        }
    }
}

TEST_CASE("in_localization checks the denominator's prime support") {
    CHECK(in_localization(Rational(17, 72), {2, 3}));
    CHECK_FALSE(in_localization(Rational(1, 5), {2, 3}));
    CHECK(in_localization(Rational(7), {}));
    CHECK(in_localization(Rational(0), {}));
}

TEST_CASE("in_localization is monotone in the prime set") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational q(rng.int_in(0, 100), rng.int_in(1, 100));
        if (in_localization(q, {2, 3})) {
            CHECK(in_localization(q, {2, 3, 5}));
        }
        if (in_localization(q, {2})) {
            CHECK(in_localization(q, {2, 7}));
        }
    }
}

TEST_CASE("rational parsing round-trips") {
    for (const char* text : {"17/72", "-5/3", "0", "42", "-7"}) {
        Rational q = Rational::parse(text);
        CHECK(Rational::parse(q.str()) == q);
        CHECK(q.str() == text);
    }
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
}

TEST_CASE("floor rounds toward negative infinity") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4, 2).floor() == -2);
}

TEST_CASE("prime helpers") {
    CHECK(is_prime(BigInt(2)));
    CHECK(is_prime(BigInt(31)));
    CHECK_FALSE(is_prime(BigInt(1)));
    CHECK_FALSE(is_prime(BigInt(91)));
    CHECK(prime_factors(BigInt(72)) == std::vector<BigInt>{2, 3});
    CHECK(prime_factors(BigInt(-15)) == std::vector<BigInt>{3, 5});
}
