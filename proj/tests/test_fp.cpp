#include "monoidlab/fp.hpp"
#include "monoidlab/parser.hpp"
#include "monoidlab/rng.hpp"

#include <doctest.h>

#include <set>

using namespace monoidlab;

namespace {

/// Direct-powering oracle for multiplicative orders.
std::int64_t order_by_powering(std::int64_t a, std::int64_t p) {
    std::int64_t value = a % p;
    std::int64_t e = 1;
    while (value != 1) {
        value = fp_mul(value, a, p);
        ++e;
    }
    return e;
}

FpPoly random_poly(Rng& rng, std::int64_t p, int max_degree) {
    int degree = static_cast<int>(rng.int_in(1, max_degree));
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = rng.int_in(0, p - 1);
    if (coeffs.back() == 0) coeffs.back() = 1;
    return FpPoly(p, std::move(coeffs));
}

}  // namespace

TEST_CASE("multiplicative_order matches direct powering") {
    CHECK(multiplicative_order({1, 5}) == 1);
    CHECK(multiplicative_order({2, 5}) == order_by_powering(2, 5));
    CHECK(multiplicative_order({2, 5}) == 4);
    CHECK(multiplicative_order({6, 7}) == 2);
    CHECK_THROWS_AS(multiplicative_order({0, 5}), std::domain_error);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 29, 31}) {
        for (std::int64_t a = 1; a < p; ++a) {
            std::int64_t e = multiplicative_order({a, p});
            CHECK(e == order_by_powering(a, p));
            CHECK((p - 1) % e == 0);
        }
    }
}

TEST_CASE("primitive_roots enumerates elements of full order") {
    auto roots_as_set = [](std::int64_t p) {
        std::set<std::int64_t> out;
        for (const FpElem& root : primitive_roots(p)) out.insert(root.value);
        return out;
    };
    CHECK(roots_as_set(3) == std::set<std::int64_t>{2});
    CHECK(roots_as_set(5) == std::set<std::int64_t>{2, 3});
    CHECK(roots_as_set(2) == std::set<std::int64_t>{1});
    // order-enumeration oracle
    for (std::int64_t p : {7, 11, 13}) {
        std::set<std::int64_t> expected;
        for (std::int64_t a = 1; a < p; ++a) {
            if (order_by_powering(a, p) == p - 1) expected.insert(a);
        }
        CHECK(roots_as_set(p) == expected);
    }
}

TEST_CASE("binomial criterion on the worked instances") {
    CHECK(binomial_irreducible(4, {2, 5}));
    CHECK(is_irreducible_oracle(binomial_poly(5, 4, 2)));
    CHECK_FALSE(binomial_irreducible(2, {1, 5}));
    CHECK_FALSE(is_irreducible_oracle(binomial_poly(5, 2, 1)));
    // (q-1)^2 = 16 with the primitive root 2 mod 5
    CHECK(binomial_irreducible(16, {2, 5}));
    CHECK(is_irreducible_oracle(binomial_poly(5, 16, 2)));
    CHECK_THROWS_AS(binomial_irreducible(1, {2, 5}), std::domain_error);
}

TEST_CASE("trinomial parameters from the recursion") {
    CHECK(trinomial_parameter(3).value == 1);
    CHECK(trinomial_parameter(7).value == 2);
    CHECK(trinomial_parameter(11).value == 4);
    CHECK_THROWS_AS(trinomial_parameter(5), std::domain_error);
    for (std::int64_t p : {3, 7, 11, 19, 23, 31}) {
        FpElem a = trinomial_parameter(p);
        for (int k = 1; k <= 4; ++k) {
            CHECK(is_irreducible_oracle(trinomial_poly(p, k, a.value)));
        }
    }
}

TEST_CASE("irreducibility oracle on fixed polynomials") {
    CHECK(is_irreducible_oracle(parse_fp_poly("x^2+x+1", 2)));
    CHECK(is_irreducible_oracle(parse_fp_poly("x^6+x^3+1", 2)));
    CHECK_FALSE(is_irreducible_oracle(parse_fp_poly("x^2+4", 5)));  // x^2 - 1 over F_5
    CHECK_THROWS_AS(is_irreducible_oracle(FpPoly::constant(5, 3)), std::domain_error);
}

TEST_CASE("both oracle paths agree on the overlap region") {
    Rng rng(37);
    OracleConfig force_frobenius;
    force_frobenius.trial_cutoff_degree = 0;
    for (std::int64_t p : {2, 3, 5}) {
        for (int i = 0; i < 60; ++i) {
            FpPoly f = random_poly(rng, p, 6);
            if (f.degree() < 1) continue;
            CHECK(is_irreducible_oracle(f) == is_irreducible_oracle(f, force_frobenius));
        }
    }
}

TEST_CASE("factorize on fixed polynomials") {
    auto fac = factorize(parse_fp_poly("x^2+x", 2));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == parse_fp_poly("x", 2));
    CHECK(fac.factors[1].first == parse_fp_poly("x+1", 2));

    auto self = factorize(parse_fp_poly("x^6+x^3+1", 2));
    REQUIRE(self.factors.size() == 1);
    CHECK(self.factors[0].second == 1);
    CHECK(self.factors[0].first == parse_fp_poly("x^6+x^3+1", 2));

    auto square = factorize(parse_fp_poly("x^4+x^2+1", 2));
    REQUIRE(square.factors.size() == 1);
    CHECK(square.factors[0].first == parse_fp_poly("x^2+x+1", 2));
    CHECK(square.factors[0].second == 2);

    CHECK_THROWS_AS(factorize(FpPoly::zero(2)), std::domain_error);
}

TEST_CASE("factorize is sound and complete on random polynomials") {
    Rng rng(41);
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (int i = 0; i < 250; ++i) {
            FpPoly f = random_poly(rng, p, 10);
            FpFactorization fac = factorize(f);
            CHECK(fp_factorization_product(fac, p) == f);
            for (const auto& [g, m] : fac.factors) {
                CHECK(m >= 1);
                CHECK(g.is_monic());
                CHECK(is_irreducible_oracle(g));
            }
        }
    }
}

TEST_CASE("factorize above the trial cutoff uses splitting and stays sound") {
    // (x^6+x^3+1)^3 has degree 18, beyond exhaustive trial division over F_2.
    FpPoly base = parse_fp_poly("x^6+x^3+1", 2);
    FpPoly f = fp_poly_pow(base, BigInt(3));
    FpFactorization fac = factorize(f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == base);
    CHECK(fac.factors[0].second == 3);
}

TEST_CASE("frobenius_power_check holds on the worked instances and random inputs") {
    CHECK(frobenius_power_check(parse_fp_poly("x+1", 2), 1));
    CHECK(frobenius_power_check(parse_fp_poly("x^2+x+1", 2), 2));
    CHECK(frobenius_power_check(parse_fp_poly("2*x+1", 3), 1));
    Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        std::int64_t p = (i % 3 == 0) ? 2 : (i % 3 == 1) ? 3 : 5;
        FpPoly g = random_poly(rng, p, 4);
        int n = static_cast<int>(rng.int_in(1, 3));
        CHECK(frobenius_power_check(g, n));
    }
}
