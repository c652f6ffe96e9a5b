#include "monoidlab/semidomain.hpp"

#include "monoidlab/parser.hpp"
#include "monoidlab/rng.hpp"

#include <doctest.h>

using namespace monoidlab;

namespace {

FpExpr random_expr(Rng& rng, std::int64_t p, int max_terms) {
    FpExpr f;
    int terms = static_cast<int>(rng.int_in(0, max_terms));
    for (int i = 0; i < terms; ++i) {
        Rational e(rng.int_in(0, 6), rng.int_in(1, 3));
        f.add_term(e, FpElem{rng.int_in(0, p - 1), p});
    }
    return f;
}

}  // namespace

TEST_CASE("structure reads support, order, degree, and the extreme coefficients") {
    FpExpr f = parse_fp_expr("x^(1/2) + x^2", 5);
    auto s = structure(f);
    CHECK(s.support == std::vector<Rational>{Rational(1, 2), Rational(2)});
    CHECK(s.order == Rational(1, 2));
    CHECK(s.degree == Rational(2));

    FpExpr one = parse_fp_expr("1", 5);
    auto s1 = structure(one);
    CHECK(s1.order == Rational(0));
    CHECK(s1.degree == Rational(0));

    FpExpr g = parse_fp_expr("x + x^(1/2) + 1", 2);
    auto sg = structure(g);
    CHECK(sg.order == Rational(0));
    CHECK(sg.degree == Rational(1));
    CHECK(sg.order_coeff.value == 1);

    CHECK_THROWS_AS(structure(FpExpr{}), std::domain_error);
}

TEST_CASE("arithmetic on the worked instances") {
    FpExpr half = parse_fp_expr("x^(1/2) + 1", 2);
    CHECK(half * half == parse_fp_expr("x + 1", 2));
    FpExpr g = parse_fp_expr("x + x^(1/2) + 1", 2);
    CHECK(g * g == parse_fp_expr("x^2 + x + 1", 2));
    FpExpr f = parse_fp_expr("x^(17/72) + 3", 5);
    CHECK(f * parse_fp_expr("1", 5) == f);
}

TEST_CASE("ring axioms hold on random expressions") {
    Rng rng(53);
    for (int i = 0; i < 80; ++i) {
        std::int64_t p = (i % 2 == 0) ? 2 : 5;
        FpExpr a = random_expr(rng, p, 4);
        FpExpr b = random_expr(rng, p, 4);
        FpExpr c = random_expr(rng, p, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("order and degree are additive on products over a field") {
    Rng rng(59);
    for (int i = 0; i < 100; ++i) {
        std::int64_t p = (i % 2 == 0) ? 3 : 7;
        FpExpr a = random_expr(rng, p, 4);
        FpExpr b = random_expr(rng, p, 4);
        if (a.is_zero() || b.is_zero()) continue;
        FpExpr ab = a * b;
        REQUIRE_FALSE(ab.is_zero());
        CHECK(ab.order() == a.order() + b.order());
        CHECK(ab.degree() == a.degree() + b.degree());
    }
}

TEST_CASE("divisor-closedness of constants and monomials") {
    // exhaustive small-support search over F_2 with supports in {0, 1/2, 1}
    std::vector<FpExpr> all;
    std::vector<Rational> exps{Rational(0), Rational(1, 2), Rational(1)};
    for (int mask = 1; mask < 8; ++mask) {
        FpExpr f;
        for (int bit = 0; bit < 3; ++bit) {
            if (mask & (1 << bit)) f.add_term(exps[static_cast<std::size_t>(bit)], FpElem{1, 2});
        }
        all.push_back(f);
    }
    for (const FpExpr& g : all) {
        for (const FpExpr& h : all) {
            FpExpr product = g * h;
            if (product.is_zero()) continue;
            if (product.is_constant()) {
                CHECK(g.is_constant());
                CHECK(h.is_constant());
            }
            if (product.is_monomial()) {
                CHECK(g.is_monomial());
                CHECK(h.is_monomial());
            }
        }
    }
    // random sampling over F_5
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        FpExpr g = random_expr(rng, 5, 3);
        FpExpr h = random_expr(rng, 5, 3);
        if (g.is_zero() || h.is_zero()) continue;
        FpExpr product = g * h;
        CHECK(product.is_monomial() == (g.is_monomial() && h.is_monomial()));
    }
}

TEST_CASE("units are exactly the nonzero constants") {
    CHECK(is_unit(parse_fp_expr("2", 5)));
    CHECK_FALSE(is_unit(parse_fp_expr("x^(1/2)", 5)));
    CHECK_FALSE(is_unit(FpExpr{}));
}

TEST_CASE("substitute_power scales the support") {
    FpExpr f = parse_fp_expr("x^2 + x + 1", 2);
    CHECK(substitute_power(f, Rational(3)) == parse_fp_expr("x^6 + x^3 + 1", 2));
    CHECK(substitute_power(f, Rational(1, 2)) == parse_fp_expr("x + x^(1/2) + 1", 2));
    CHECK(substitute_power(f, Rational(1)) == f);
    CHECK_THROWS_AS(substitute_power(f, Rational(0)), std::domain_error);
}

TEST_CASE("substitution by p is the Frobenius power") {
    Rng rng(67);
    for (int i = 0; i < 100; ++i) {
        std::int64_t p = (i % 2 == 0) ? 2 : 3;
        FpExpr f = random_expr(rng, p, 4);
        if (f.is_zero()) continue;
        CHECK(substitute_power(f, Rational(p)) == f.pow(static_cast<unsigned long long>(p)));
    }
}

TEST_CASE("clear_denominators bridges into F_p[x]") {
    auto [standard, d] = clear_denominators(parse_fp_expr("x + x^(1/2) + 1", 2));
    CHECK(standard == parse_fp_poly("x^2 + x + 1", 2));
    CHECK(d == 2);

    auto [same, one] = clear_denominators(parse_fp_expr("x^2 + x + 1", 2));
    CHECK(same == parse_fp_poly("x^2 + x + 1", 2));
    CHECK(one == 1);

    auto [mono, den] = clear_denominators(parse_fp_expr("x^(17/72)", 2));
    CHECK(mono == parse_fp_poly("x^17", 2));
    CHECK(den == 72);
}

TEST_CASE("clear_denominators round-trips through substitute_power") {
    Rng rng(71);
    for (int i = 0; i < 100; ++i) {
        FpExpr f = random_expr(rng, 3, 4);
        if (f.is_zero()) continue;
        auto [standard, d] = clear_denominators(f);
        FpExpr back = from_standard(standard, Rational(1) / Rational(d));
        CHECK(back == f);
        // on standard polynomials the pair is the identity
        FpExpr std_expr = from_standard(standard, Rational(1));
        auto [again, one] = clear_denominators(std_expr);
        CHECK(again == standard);
        CHECK(one == 1);
    }
}

TEST_CASE("divide_exact recovers cofactors") {
    FpExpr fd = parse_fp_expr("x^2 + x + 1", 2);
    FpExpr fdn = substitute_power(fd, Rational(1, 2));
    FpExpr b = parse_fp_expr("x^(17/72) + 1", 2);
    auto quotient = divide_exact(fdn * b, fdn);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == b);
    CHECK_FALSE(divide_exact(parse_fp_expr("x + 1", 2), fd).has_value());
}

TEST_CASE("support_in_monoid certifies per exponent") {
    PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(2, 3, 6);
    SupportReport yes = support_in_monoid(parse_fp_expr("x^(1/2) + 1", 2), spec, 1);
    CHECK(yes.all_certified);

    SupportReport no = support_in_monoid(parse_fp_expr("x^(1/5)", 2), spec, 6);
    CHECK_FALSE(no.all_certified);

    SupportReport gen = support_in_monoid(parse_fp_expr("x^(17/72)", 2), spec, 1);
    CHECK(gen.all_certified);
    REQUIRE(gen.entries.size() == 1);
    REQUIRE(gen.entries[0].certificate.has_value());
    CHECK(gen.entries[0].certificate->coeffs ==
          std::map<std::string, unsigned long long>{{"a1", 1}});
}

TEST_CASE("indecomposable standard polynomials") {
    CHECK(indecomposable(parse_fp_poly("x^2+x+1", 2)));
    CHECK_FALSE(indecomposable(parse_fp_poly("x^2", 2)));
    CHECK_THROWS_AS(indecomposable(FpPoly::constant(2, 1)), std::domain_error);
}

TEST_CASE("x decomposes in F_2[M_{2,3}] as a square root pair") {
    PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(2, 3, 6);
    CHECK_FALSE(indecomposable_in_monoid(parse_fp_expr("x", 2), spec, 6));
}

TEST_CASE("atom test finds the Frobenius witness for x^2+x+1") {
    PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(2, 3, 6);
    ExprAtomVerdict verdict = atom_test_bounded(parse_fp_expr("x^2+x+1", 2), spec, 6);
    CHECK(verdict.status == AtomTestStatus::Reducible);
    REQUIRE(verdict.witness.has_value());
    FpExpr expected = parse_fp_expr("x + x^(1/2) + 1", 2);
    CHECK(verdict.witness->first == expected);
    CHECK(verdict.witness->second == expected);
    CHECK(verdict.support_certificates.count("0") == 1);
    CHECK(verdict.support_certificates.count("1/2") == 1);
    CHECK(verdict.support_certificates.count("1") == 1);
}

TEST_CASE("monomials mirror the monoid atom test") {
    PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(2, 3, 6);
    ExprAtomVerdict atom = atom_test_bounded(parse_fp_expr("x^(17/72)", 2), spec, 6);
    CHECK(atom.status == AtomTestStatus::AtomAtDepth);

    // exponent 1/2 = a_1 + b_1 splits the monomial
    ExprAtomVerdict split = atom_test_bounded(parse_fp_expr("x^(1/2)", 2), spec, 6);
    CHECK(split.status == AtomTestStatus::Reducible);
    REQUIRE(split.witness.has_value());
    CHECK(split.witness->first * split.witness->second == parse_fp_expr("x^(1/2)", 2));

    ExprAtomVerdict unit = atom_test_bounded(parse_fp_expr("2", 5), spec, 6);
    CHECK(unit.status == AtomTestStatus::Unit);

    CHECK_THROWS_AS(atom_test_bounded(FpExpr{}, spec, 6), std::domain_error);
}
