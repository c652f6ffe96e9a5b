#include "monoidlab/subring.hpp"

#include "monoidlab/parser.hpp"
#include "monoidlab/rng.hpp"

#include <doctest.h>

using namespace monoidlab;

TEST_CASE("subring membership by coefficient shape") {
    SubringSpec zq{TopField::Q};
    CHECK(membership_subring(parse_subring_poly("3 + 2*x + (1/2)*x^2"), zq));
    CHECK_FALSE(membership_subring(parse_subring_poly("(1/2)*x"), zq));
    SubringSpec zkst{TopField::Qst};
    CHECK(membership_subring(parse_subring_poly("s*x^2"), zkst));
    SubringSpec zks{TopField::Qs};
    CHECK(membership_subring(parse_subring_poly("s*x^2"), zks));
    CHECK_FALSE(membership_subring(parse_subring_poly("t*x^2"), zks));
    CHECK_FALSE(membership_subring(parse_subring_poly("s*x^2"), zq));
}

TEST_CASE("atomicity criterion on the worked instances") {
    SubringSpec zq{TopField::Q};
    CHECK_FALSE(is_atomic_element(parse_subring_poly("(1/2)*x^2"), zq));
    CHECK(is_atomic_element(parse_subring_poly("x"), zq));
    CHECK(is_atomic_element(parse_subring_poly("2 + x^3"), zq));
    CHECK_THROWS_AS(is_atomic_element(parse_subring_poly("(1/2)*x"), zq), std::domain_error);
    CHECK_THROWS_AS(is_atomic_element(SubringPoly{}, zq), std::domain_error);
}

TEST_CASE("order coefficients multiply, so the criterion respects products") {
    Rng rng(83);
    SubringSpec zq{TopField::Q};
    for (int i = 0; i < 100; ++i) {
        auto make_member = [&](int order) {
            std::vector<RatFunc> coeffs(static_cast<std::size_t>(order) + 2);
            coeffs[static_cast<std::size_t>(order)] =
                RatFunc(Rational(rng.int_in(1, 9) * (rng.coin() ? 1 : -1)));
            coeffs.back() = RatFunc(Rational(rng.int_in(1, 5), rng.int_in(1, 4)));
            return SubringPoly(std::move(coeffs));
        };
        SubringPoly f = make_member(static_cast<int>(rng.int_in(2, 3)));
        SubringPoly g = make_member(static_cast<int>(rng.int_in(2, 3)));
        CHECK(is_atomic_element(f, zq));
        CHECK(is_atomic_element(g, zq));
        CHECK(is_atomic_element(f * g, zq));
    }
}

TEST_CASE("almost atomic witness clears the order denominator") {
    SubringSpec zq{TopField::Q};
    CHECK(almost_atomic_witness(parse_subring_poly("(1/2)*x^2 + x^3"), zq) == 2);
    CHECK(almost_atomic_witness(parse_subring_poly("7 + x"), zq) == 1);
    CHECK(almost_atomic_witness(parse_subring_poly("x + (1/3)*x^2"), zq) == 1);
    CHECK(almost_atomic_witness(parse_subring_poly("(1/3)*x^2 + x^4"), zq) == 3);
    SubringPoly f = parse_subring_poly("(1/2)*x^2 + x^3");
    BigInt s = almost_atomic_witness(f, zq);
    CHECK(is_atomic_element(SubringPoly::constant(RatFunc(Rational(s))) * f, zq));
}

TEST_CASE("quasi atomic witness is k^(-1) x^2") {
    SubringSpec zkst{TopField::Qst};
    SubringPoly f = parse_subring_poly("s*x^2");
    SubringPoly g = quasi_atomic_witness(f, zkst);
    CHECK(g == parse_subring_poly("(1/s)*x^2"));
    CHECK(g * f == parse_subring_poly("x^4"));
    CHECK(is_atomic_element(g * f, zkst));

    CHECK(quasi_atomic_witness(parse_subring_poly("1"), zkst) == parse_subring_poly("x^2"));

    SubringPoly h = parse_subring_poly("(s + 1)*x^3");
    SubringPoly gh = quasi_atomic_witness(h, zkst);
    CHECK(gh * h == parse_subring_poly("x^5"));
    CHECK((gh * h).order_coeff() == RatFunc(1));
}

TEST_CASE("kappa x^2 blocks almost atomicity") {
    SubringSpec zks{TopField::Qs};
    RatFunc kappa = RatFunc::var_s();
    NonAlmostAtomicRecord record =
        not_almost_atomic_witness(zks, kappa, parse_subring_poly("x"));
    CHECK(record.product_order_coeff == RatFunc::var_s());
    CHECK_FALSE(record.order_coeff_in_base);

    NonAlmostAtomicRecord record2 =
        not_almost_atomic_witness(zks, kappa, parse_subring_poly("2 + x"));
    CHECK(record2.product_order_coeff == RatFunc(2) * RatFunc::var_s());
    CHECK_FALSE(record2.order_coeff_in_base);

    CHECK_THROWS_AS(not_almost_atomic_witness(zks, RatFunc(Rational(1, 2)),
                                              parse_subring_poly("x")),
                    std::domain_error);
}

TEST_CASE("infinite descent on q x^2") {
    DescentChain chain = infinite_descent_demo(Rational(1, 2), BigInt(2), 3);
    REQUIRE(chain.steps.size() == 3);
    CHECK(chain.steps[0].cofactor_coeff == Rational(1, 4));
    CHECK(chain.steps[1].cofactor_coeff == Rational(1, 8));
    CHECK(chain.steps[2].cofactor_coeff == Rational(1, 16));
    CHECK(chain.strictly_proper);
    for (const DescentStep& step : chain.steps) {
        CHECK(step.member);
        CHECK_FALSE(step.atomic);
    }

    DescentChain one = infinite_descent_demo(Rational(1), BigInt(2), 1);
    CHECK(one.steps[0].cofactor_coeff == Rational(1, 2));
    CHECK(one.steps[0].member);

    CHECK_THROWS_AS(infinite_descent_demo(Rational(1, 2), BigInt(4), 2), std::domain_error);
}

TEST_CASE("claim 1 flags fractional low-degree coefficients") {
    Claim1Report report =
        claim1_constraints({parse_subring_poly("1")}, 2, RatFunc::var_t());
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].member);
    CHECK(report.entries[0].violations.empty());
    CHECK_FALSE(report.entries[1].member);
    REQUIRE(report.entries[1].violations.size() == 1);
    CHECK(report.entries[1].violations[0].second ==
          RatFunc::var_s() / RatFunc::var_t());
    CHECK(report.any_violation);

    Claim1Report vacuous = claim1_constraints({parse_subring_poly("0")}, 1, RatFunc::var_t());
    CHECK_FALSE(vacuous.any_violation);
    for (const Claim1Entry& entry : vacuous.entries) {
        CHECK(entry.member);
    }

    Claim1Report two = claim1_constraints({parse_subring_poly("1"), parse_subring_poly("0")}, 2,
                                          RatFunc::var_t());
    CHECK(two.any_violation);

    CHECK_THROWS_AS(claim1_constraints({parse_subring_poly("1")}, 2, RatFunc()),
                    std::domain_error);
    CHECK_THROWS_AS(claim1_constraints({parse_subring_poly("1")}, 3, RatFunc::var_t()),
                    std::domain_error);
}

TEST_CASE("claim 2 recursion and degree law") {
    auto qs = claim2_polynomials(BigInt(1), {BigInt(0), BigInt(0)}, 0, 2);
    REQUIRE(qs.size() == 2);
    CHECK(qs[0] == parse_q_expr("-x"));
    CHECK(qs[1] == parse_q_expr("x^2"));

    auto base = claim2_polynomials(BigInt(2), {BigInt(1)}, 0, 1);
    REQUIRE(base.size() == 1);
    CHECK(base[0] == parse_q_expr("-x + 1/2"));

    for (std::size_t k = 0; k < qs.size(); ++k) {
        CHECK(qs[k].degree() == Rational(static_cast<long long>(k + 1)));
    }
    CHECK_THROWS_AS(claim2_polynomials(BigInt(0), {BigInt(1)}, 0, 1), std::domain_error);
    CHECK_THROWS_AS(claim2_polynomials(BigInt(1), {BigInt(1)}, 0, 2), std::domain_error);
}

TEST_CASE("RYPoly arithmetic and membership") {
    RYPoly target = quasi_atomic_target();
    CHECK(target.y_degree() == 1);
    CHECK(target.x_degree() == 2);
    CHECK(target == parse_ry_poly("s*x^2*y + t*x^2"));
    SubringSpec zkst{TopField::Qst};
    CHECK(membership_subring(target, zkst));
    CHECK_FALSE(membership_subring(parse_ry_poly("s*y + t"), zkst));
    CHECK(parse_ry_poly("y + 1") * parse_ry_poly("y - 1") == parse_ry_poly("y^2 - 1"));
    CHECK(parse_ry_poly("1").is_unit());
    CHECK(parse_ry_poly("-1").is_unit());
    CHECK_FALSE(parse_ry_poly("2").is_unit());
    CHECK_FALSE(parse_ry_poly("y").is_unit());
}

TEST_CASE("bounded member splits") {
    SubringSpec zkst{TopField::Qst};
    // (s x^2) y + (t x^2) = 2 * ((s/2 x^2) y + (t/2 x^2))
    auto split = bounded_member_split(quasi_atomic_target(), zkst);
    REQUIRE(split.has_value());
    CHECK(split->first * split->second == quasi_atomic_target());
    CHECK(membership_subring(split->first, zkst));
    CHECK(membership_subring(split->second, zkst));
    CHECK_FALSE(split->first.is_unit());
    CHECK_FALSE(split->second.is_unit());

    // y + 1 admits no member split within the default budget
    CHECK_FALSE(bounded_member_split(parse_ry_poly("y + 1"), zkst).has_value());
    // nor does the atom x
    CHECK_FALSE(bounded_member_split(parse_ry_poly("x"), zkst).has_value());
    // with a starved coefficient budget even the target resists splitting
    ProbeBudget starved{4, 2, 1};
    CHECK_FALSE(bounded_member_split(quasi_atomic_target(), zkst, starved).has_value());
}

TEST_CASE("refuter verdicts on representative candidates") {
    SubringSpec zkst{TopField::Qst};
    RYPoly one = parse_ry_poly("1");

    RefuteVerdict empty = refute_quasi_atomic_candidate(one, {}, zkst);
    CHECK(empty.status == RefuteStatus::Invalid);

    RefuteVerdict mismatch =
        refute_quasi_atomic_candidate(one, {parse_ry_poly("x"), parse_ry_poly("x")}, zkst);
    CHECK(mismatch.status == RefuteStatus::Invalid);

    RefuteVerdict nonmember = refute_quasi_atomic_candidate(
        one, {parse_ry_poly("x"), parse_ry_poly("x"), parse_ry_poly("s*y + t")}, zkst);
    CHECK(nonmember.status == RefuteStatus::Invalid);
    CHECK(nonmember.factor_index == 2);

    RefuteVerdict reducible =
        refute_quasi_atomic_candidate(one, {parse_ry_poly("s*x^2*y + t*x^2")}, zkst);
    CHECK(reducible.status == RefuteStatus::Invalid);
    CHECK(reducible.reason.find("member factorization") != std::string::npos);

    // with a starved probe the same candidate becomes unknown-at-budget
    ProbeBudget starved{4, 2, 1};
    RefuteVerdict unknown = refute_quasi_atomic_candidate(
        one, {parse_ry_poly("s*x^2*y + t*x^2")}, zkst, starved);
    CHECK(unknown.status == RefuteStatus::UnknownAtBudget);

    RefuteVerdict unit_factor = refute_quasi_atomic_candidate(
        one, {parse_ry_poly("1"), parse_ry_poly("s*x^2*y + t*x^2")}, zkst);
    CHECK(unit_factor.status == RefuteStatus::Invalid);
}
