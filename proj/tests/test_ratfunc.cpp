#include "monoidlab/mpoly.hpp"
#include "monoidlab/parser.hpp"
#include "monoidlab/rng.hpp"

#include <doctest.h>

using namespace monoidlab;

namespace {

RatFunc random_ratfunc(Rng& rng) {
    auto random_mpoly = [&](bool nonzero) {
        MPoly p;
        int terms = static_cast<int>(rng.int_in(nonzero ? 1 : 0, 3));
        for (int i = 0; i < terms; ++i) {
            Exponents e{static_cast<int>(rng.int_in(0, 2)), static_cast<int>(rng.int_in(0, 2))};
            p.add_term(e, Rational(rng.int_in(-4, 4)));
        }
        if (nonzero && p.is_zero()) p.add_term({0, 0}, Rational(1));
        return p;
    };
    return RatFunc(random_mpoly(false), random_mpoly(true));
}

}  // namespace

TEST_CASE("field identities in Q(s,t)") {
    RatFunc s = RatFunc::var_s();
    RatFunc t = RatFunc::var_t();
    CHECK(s * s.inverse() == RatFunc(1));
    CHECK(s + t != s * t);
    CHECK((s / t) + (t / s) == (s * s + t * t) / (s * t));
    CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
}

TEST_CASE("normalization keeps integer contents coprime and the denominator positive") {
    MPoly two_s = MPoly::var_s().scaled(Rational(2));
    MPoly four_t = MPoly::var_t().scaled(Rational(4));
    RatFunc v(two_s, four_t);
    CHECK(v.num() == MPoly::var_s());
    CHECK(v.den() == MPoly::var_t().scaled(Rational(2)));

    RatFunc w(MPoly::var_s(), MPoly::var_t().scaled(Rational(-1)));
    CHECK(w.den().leading_coeff().is_positive());
    CHECK(w == -(RatFunc::var_s() / RatFunc::var_t()));
}

TEST_CASE("cross-multiplication equality is consistent with arithmetic") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        RatFunc a = random_ratfunc(rng);
        RatFunc c = random_ratfunc(rng);
        // b and d are a and c in unreduced clothing
        MPoly scale = MPoly::var_s() + MPoly(Rational(3));
        RatFunc b(a.num() * scale, a.den() * scale);
        RatFunc d(c.num() * scale, c.den() * scale);
        CHECK(a == b);
        CHECK(c == d);
        CHECK(a + c == b + d);
        CHECK(a * c == b * d);
    }
}

TEST_CASE("rational constants are recognized") {
    RatFunc half(Rational(1, 2));
    CHECK(half.is_rational_constant());
    CHECK_FALSE(half.is_integer());
    CHECK(half.rational_value() == Rational(1, 2));
    CHECK(RatFunc(3).is_integer());
    CHECK_FALSE(RatFunc::var_s().is_rational_constant());
    RatFunc ratio = RatFunc::var_s() / RatFunc::var_s();
    CHECK(ratio == RatFunc(1));
    // the unreduced representation s/s is still recognized semantically
    CHECK(ratio.is_rational_constant());
    CHECK(ratio.is_integer());
    CHECK(ratio.rational_value() == Rational(1));
    RatFunc skew = (RatFunc::var_s() * RatFunc::var_t()) / RatFunc::var_t();
    CHECK_FALSE(skew.is_rational_constant());
}

TEST_CASE("ratfunc text form round-trips") {
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        RatFunc v = random_ratfunc(rng);
        CHECK(parse_ratfunc(v.str()) == v);
    }
}
