#include "monoidlab/parser.hpp"

#include "monoidlab/rng.hpp"

#include <doctest.h>

using namespace monoidlab;

TEST_CASE("expression parsing on the worked instances") {
    FpExpr fd = parse_fp_expr("x^2+x+1", 2);
    CHECK(fd.term_count() == 3);
    CHECK(fd.degree() == Rational(2));

    FpExpr mono = parse_fp_expr("x^(17/72)", 2);
    CHECK(mono.is_monomial());
    CHECK(mono.order() == Rational(17, 72));

    CHECK_THROWS_AS(parse_fp_expr("x^(1/0)", 2), ParseError);
    CHECK(parse_rational("17/72") == Rational(17, 72));
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_generic("x^2 + @");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
    try {
        parse_generic("x^2 + x x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);  // trailing input
    }
    CHECK_THROWS_AS(parse_generic("(x + 1"), ParseError);
    CHECK_THROWS_AS(parse_generic(""), ParseError);
    CHECK_THROWS_AS(parse_generic("1/(s - s)"), ParseError);
}

TEST_CASE("domain checks at lowering") {
    CHECK_THROWS_AS(parse_fp_expr("s*x", 2), std::domain_error);
    CHECK_THROWS_AS(parse_fp_expr("y + 1", 2), std::domain_error);
    CHECK_THROWS_AS(parse_fp_expr("x^(1/2) + 1/2", 2), std::domain_error);  // 1/2 mod 2
    CHECK_THROWS_AS(parse_fp_expr("x^(-1/2)", 2), std::domain_error);
    CHECK_THROWS_AS(parse_subring_poly("x^(1/2)"), std::domain_error);
    CHECK_THROWS_AS(parse_int_poly("(1/2)*x"), std::domain_error);
    CHECK(parse_fp_expr("5 + x", 3) == parse_fp_expr("2 + x", 3));
    CHECK(parse_fp_expr("1/2", 3).order_coeff().value == 2);  // inverse of 2 mod 3
}

TEST_CASE("negative exponents invert constants only") {
    CHECK(parse_ratfunc("(s + 1)^-1") == RatFunc(1) / (RatFunc::var_s() + RatFunc(1)));
    CHECK(parse_ratfunc("s^-2 * s^2") == RatFunc(1));
    CHECK_THROWS_AS(parse_generic("(x + 1)^-1"), ParseError);
}

TEST_CASE("printing round-trips for F_p expressions") {
    Rng rng(89);
    for (int i = 0; i < 150; ++i) {
        std::int64_t p = (i % 2 == 0) ? 2 : 7;
        FpExpr f;
        int terms = static_cast<int>(rng.int_in(0, 5));
        for (int j = 0; j < terms; ++j) {
            f.add_term(Rational(rng.int_in(0, 9), rng.int_in(1, 8)),
                       FpElem{rng.int_in(0, p - 1), p});
        }
        if (f.is_zero()) continue;
        CHECK(parse_fp_expr(f.str(), p) == f);
    }
}

TEST_CASE("printing round-trips for rational-coefficient expressions") {
    Rng rng(97);
    for (int i = 0; i < 150; ++i) {
        QExpr f;
        int terms = static_cast<int>(rng.int_in(0, 5));
        for (int j = 0; j < terms; ++j) {
            f.add_term(Rational(rng.int_in(0, 9), rng.int_in(1, 8)),
                       Rational(rng.int_in(-9, 9), rng.int_in(1, 6)));
        }
        if (f.is_zero()) continue;
        CHECK(parse_q_expr(f.str()) == f);
    }
}

TEST_CASE("printing round-trips for subring polynomials") {
    Rng rng(101);
    RatFunc s = RatFunc::var_s();
    RatFunc t = RatFunc::var_t();
    for (int i = 0; i < 100; ++i) {
        std::vector<RatFunc> coeffs(static_cast<std::size_t>(rng.int_in(1, 5)));
        for (auto& c : coeffs) {
            switch (rng.below(5)) {
                case 0: c = RatFunc(Rational(rng.int_in(-5, 5))); break;
                case 1: c = RatFunc(Rational(rng.int_in(-5, 5), rng.int_in(1, 4))); break;
                case 2: c = s * RatFunc(Rational(rng.int_in(1, 3))); break;
                case 3: c = (s + RatFunc(Rational(rng.int_in(1, 3)))) / t; break;
                default: break;  // keep zero
            }
        }
        SubringPoly f(std::move(coeffs));
        if (f.is_zero()) continue;
        CHECK(parse_subring_poly(f.str()) == f);
    }
}

TEST_CASE("printing round-trips for polynomials in x and y") {
    Rng rng(103);
    RatFunc s = RatFunc::var_s();
    RatFunc t = RatFunc::var_t();
    for (int i = 0; i < 100; ++i) {
        std::vector<SubringPoly> rows;
        int ydeg = static_cast<int>(rng.int_in(0, 2));
        for (int j = 0; j <= ydeg; ++j) {
            std::vector<RatFunc> coeffs(static_cast<std::size_t>(rng.int_in(1, 4)));
            for (auto& c : coeffs) {
                switch (rng.below(4)) {
                    case 0: c = RatFunc(Rational(rng.int_in(-4, 4))); break;
                    case 1: c = s; break;
                    case 2: c = t * RatFunc(Rational(rng.int_in(1, 3))); break;
                    default: break;
                }
            }
            rows.emplace_back(std::move(coeffs));
        }
        RYPoly f(std::move(rows));
        if (f.is_zero()) continue;
        CHECK(parse_ry_poly(f.str()) == f);
    }
}

TEST_CASE("grammar round-trip across a generated corpus") {
    Rng rng(107);
    int cases = 0;
    while (cases < 500) {
        FpExpr f;
        int terms = static_cast<int>(rng.int_in(1, 4));
        for (int j = 0; j < terms; ++j) {
            f.add_term(Rational(rng.int_in(0, 12), rng.int_in(1, 9)), FpElem{rng.int_in(0, 4), 5});
        }
        if (f.is_zero()) continue;
        ++cases;
        CHECK(parse_fp_expr(f.str(), 5) == f);
    }
}
