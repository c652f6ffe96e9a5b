#include "monoidlab/papercheck.hpp"

#include "monoidlab/ascent.hpp"
#include "monoidlab/fp.hpp"
#include "monoidlab/parser.hpp"
#include "monoidlab/polyexpr.hpp"
#include "monoidlab/puiseux.hpp"
#include "monoidlab/rng.hpp"
#include "monoidlab/semidomain.hpp"
#include "monoidlab/subring.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

namespace monoidlab {

namespace {

/// Collects assertion failures inside one check.
class Failures {
public:
    void require(bool ok, const std::string& what) {
        ++checked_;
        if (!ok) {
            ++failed_;
            if (first_.empty()) first_ = what;
        }
    }

    bool ok() const { return failed_ == 0; }
    int checked() const { return checked_; }
    int failed() const { return failed_; }
    const std::string& first() const { return first_; }

    void finalize(CheckReport& report) const {
        report.verdict = ok() ? "pass" : "fail";
        std::ostringstream detail;
        detail << checked_ << " assertions";
        if (!ok()) detail << ", " << failed_ << " failed; first: " << first_;
        report.detail = detail.str();
    }

private:
    int checked_ = 0;
    int failed_ = 0;
    std::string first_;
};

using CheckFn = std::function<void(CheckReport&, const PapercheckParams&)>;

struct CheckDef {
    std::string id;
    std::string suite;
    int criterion;
    std::string anchor;
    CheckFn fn;
};

// ---------------------------------------------------------------------------
// criterion 1: generator schedule of M_{q,r}

void check_mqr_schedule(CheckReport& report, const PapercheckParams& params, std::int64_t q,
                        std::int64_t r) {
    Failures f;
    long long prev = 0;
    nlohmann::json ells = nlohmann::json::array();
    for (int n = 1; n <= params.mqr_nmax; ++n) {
        long long ell = ell_sequence(q, r, n);
        ells.push_back(ell);
        f.require(ell > prev, "ell not strictly increasing at n=" + std::to_string(n));
        BigInt growth = bigint_pow(BigInt(r), static_cast<unsigned long long>(ell - prev));
        BigInt bound = 2 * bigint_pow(BigInt(q), static_cast<unsigned long long>(n) + 1);
        f.require(growth > bound, "growth condition fails at n=" + std::to_string(n));
        prev = ell;
    }
    report.witness["ell"] = ells;
    f.finalize(report);
}

void check_mqr_interleaving(CheckReport& report, const PapercheckParams& params, std::int64_t q,
                            std::int64_t r) {
    Failures f;
    GeneratorSchedule schedule{q, r, {}};
    for (int n = 1; n <= params.mqr_nmax; ++n) {
        auto [a_n, b_n] = generators(schedule, n);
        auto [a_next, b_next] = generators(schedule, n + 1);
        (void)a_next;
        f.require(Rational(1) > b_n, "b_n >= 1 at n=" + std::to_string(n));
        f.require(b_n > a_n, "b_n <= a_n at n=" + std::to_string(n));
        f.require(a_n > b_next, "a_n <= b_{n+1} at n=" + std::to_string(n));
    }
    f.finalize(report);
}

void check_mqr_sum_identity(CheckReport& report, const PapercheckParams& params, std::int64_t q,
                            std::int64_t r) {
    Failures f;
    GeneratorSchedule schedule{q, r, {}};
    for (int n = 1; n <= params.mqr_nmax; ++n) {
        auto [a_n, b_n] = generators(schedule, n);
        f.require(a_n + b_n == rational_pow(Rational(1, q), n),
                  "a_n + b_n != q^-n at n=" + std::to_string(n));
    }
    f.finalize(report);
}

void check_mqr_localization(CheckReport& report, const PapercheckParams& params, std::int64_t q,
                            std::int64_t r) {
    Failures f;
    GeneratorSchedule schedule{q, r, {}};
    std::vector<BigInt> primes = prime_factors(BigInt(q) * r);
    for (int n = 1; n <= params.mqr_nmax; ++n) {
        auto [a_n, b_n] = generators(schedule, n);
        f.require(in_localization(a_n, primes), "a_n outside Z[1/q,1/r] at n=" + std::to_string(n));
        f.require(in_localization(b_n, primes), "b_n outside Z[1/q,1/r] at n=" + std::to_string(n));
    }
    f.finalize(report);
}

void check_mqr_unit_fractions(CheckReport& report, const PapercheckParams& params, std::int64_t q,
                              std::int64_t r) {
    Failures f;
    for (int n = 1; n <= params.mqr_nmax; ++n) {
        PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(q, r, n);
        Rational target = rational_pow(Rational(1, q), n);
        auto cert = membership(target, spec, n);
        f.require(cert.has_value(), "1/q^n not certified at n=" + std::to_string(n));
        if (cert) {
            f.require(certificate_sum(*cert, spec.generators_at(n)) == target,
                      "certificate sum mismatch at n=" + std::to_string(n));
        }
    }
    f.finalize(report);
}

// ---------------------------------------------------------------------------
// criterion 2: bounded atom verdicts

void check_mqr_atoms(CheckReport& report, const PapercheckParams& params, std::int64_t q,
                     std::int64_t r) {
    Failures f;
    for (int n = 1; n <= params.atom_nmax; ++n) {
        for (int depth = n; depth <= params.atom_depth; ++depth) {
            PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(q, r, depth);
            for (const char* prefix : {"a", "b"}) {
                std::string label = prefix + std::to_string(n);
                AtomVerdict verdict = is_atom_bounded(label, spec, depth);
                f.require(verdict.is_atom_at_depth, label + " reducible at depth " +
                                                        std::to_string(depth));
            }
        }
    }
    f.finalize(report);
}

void check_mqr_nondivisibility(CheckReport& report, const PapercheckParams& params, std::int64_t q,
                               std::int64_t r) {
    Failures f;
    PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(q, r, params.atom_depth);
    GeneratorSchedule schedule{q, r, {}};
    for (int n = 1; n <= params.atom_nmax; ++n) {
        auto [a_n, b_n] = generators(schedule, n);
        f.require(!divides(b_n, a_n, spec, params.atom_depth).has_value(),
                  "b_n divides a_n at n=" + std::to_string(n));
    }
    f.finalize(report);
}

// ---------------------------------------------------------------------------
// criterion 3: binomial criterion vs oracle

void check_binomial_agreement(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    int pairs = 0;
    for (std::int64_t p = 2; p <= params.pmax; ++p) {
        if (!is_prime(BigInt(p))) continue;
        for (std::int64_t a = 1; a < p; ++a) {
            for (std::int64_t t = 2; t <= 12; ++t) {
                bool criterion = binomial_irreducible(t, {a, p});
                bool oracle = is_irreducible_oracle(binomial_poly(p, t, a));
                ++pairs;
                f.require(criterion == oracle,
                          "disagreement at p=" + std::to_string(p) + " a=" + std::to_string(a) +
                              " t=" + std::to_string(t));
            }
        }
    }
    report.witness["pairs"] = pairs;
    f.finalize(report);
}

void check_binomial_primitive_roots(CheckReport& report, const PapercheckParams&) {
    Failures f;
    struct Case {
        std::int64_t p;
        int n;
    };
    for (const Case& c : {Case{5, 1}, Case{5, 2}, Case{13, 1}, Case{13, 2}, Case{17, 1}}) {
        BigInt t_big = bigint_pow(BigInt(c.p - 1), static_cast<unsigned long long>(c.n));
        auto t = static_cast<std::int64_t>(t_big);
        for (const FpElem& a : primitive_roots(c.p)) {
            bool criterion = binomial_irreducible(t, a);
            bool oracle = is_irreducible_oracle(binomial_poly(c.p, t, a.value));
            f.require(criterion, "criterion rejects x^" + std::to_string(t) + " - " +
                                     std::to_string(a.value) + " over F_" + std::to_string(c.p));
            f.require(oracle, "oracle rejects x^" + std::to_string(t) + " - " +
                                  std::to_string(a.value) + " over F_" + std::to_string(c.p));
        }
    }
    f.finalize(report);
}

// ---------------------------------------------------------------------------
// criterion 4: trinomial construction vs oracle

void check_trinomials(CheckReport& report, const PapercheckParams&) {
    Failures f;
    nlohmann::json parameters = nlohmann::json::object();
    for (std::int64_t p : {3, 7, 11, 19, 23}) {
        FpElem a = trinomial_parameter(p);
        parameters[std::to_string(p)] = a.value;
        for (int k = 1; k <= 4; ++k) {
            f.require(is_irreducible_oracle(trinomial_poly(p, k, a.value)),
                      "trinomial reducible at p=" + std::to_string(p) + " k=" + std::to_string(k));
        }
    }
    report.witness["a"] = parameters;
    f.finalize(report);
}

// ---------------------------------------------------------------------------
// criterion 5: ascent procedure

FpPoly random_fp_poly(Rng& rng, std::int64_t p, int max_degree) {
    while (true) {
        int degree = static_cast<int>(rng.int_in(1, max_degree));
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree) + 1);
        for (auto& c : coeffs) c = rng.int_in(0, p - 1);
        if (coeffs.back() == 0) coeffs.back() = 1 + rng.int_in(0, p - 2);
        FpPoly f(p, std::move(coeffs));
        if (f.degree() >= 1) return f;
    }
}

void check_ascent_fp(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    Rng rng(params.seed ^ fnv1a("ascent-fp"));
    for (std::int64_t p : {2, 3}) {
        for (int i = 0; i < params.ascent_fp_samples; ++i) {
            FpPoly poly = random_fp_poly(rng, p, 8);
            AscentResultFp result = ascent_factorization(poly);
            FpPoly rebuilt = FpPoly::constant(p, result.unit);
            for (const FpPoly& atom : result.atoms) rebuilt = rebuilt * atom;
            f.require(rebuilt == poly, "reassembly mismatch over F_" + std::to_string(p));
            for (const FpPoly& atom : result.atoms) {
                f.require(indecomposable(atom), "decomposable atom over F_" + std::to_string(p));
            }
            FpFactorization oracle = factorize(poly);
            std::vector<FpPoly> expanded;
            for (const auto& [g, m] : oracle.factors) {
                for (int j = 0; j < m; ++j) expanded.push_back(g);
            }
            std::vector<FpPoly> atoms = result.atoms;
            std::sort(atoms.begin(), atoms.end());
            std::sort(expanded.begin(), expanded.end());
            bool same = atoms.size() == expanded.size();
            for (std::size_t j = 0; same && j < atoms.size(); ++j) {
                same = atoms[j] == expanded[j];
            }
            f.require(same, "atom multiset differs from the factorization oracle");
        }
    }
    f.finalize(report);
}

IntPoly random_int_poly(Rng& rng, int max_degree, long long coeff_bound) {
    while (true) {
        int degree = static_cast<int>(rng.int_in(1, max_degree));
        std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
        for (auto& c : coeffs) c = BigInt(rng.int_in(-coeff_bound, coeff_bound));
        IntPoly f(std::move(coeffs));
        if (f.degree() >= 1) return f;
    }
}

void check_ascent_z(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    Rng rng(params.seed ^ fnv1a("ascent-z"));
    for (int i = 0; i < params.ascent_z_samples; ++i) {
        IntPoly poly = random_int_poly(rng, 4, 10);
        AscentResultZ result = ascent_factorization(poly);
        IntPoly rebuilt = IntPoly::constant(result.constant);
        for (const IntPoly& atom : result.atoms) rebuilt = rebuilt * atom;
        f.require(rebuilt == poly, "reassembly mismatch over Z");
        BigInt abs_constant = result.constant < 0 ? BigInt(-result.constant) : result.constant;
        f.require(abs_constant == poly.content(), "constant differs from the gcd content");
        for (const IntPoly& atom : result.atoms) {
            f.require(indecomposable(atom), "decomposable atom over Z");
            f.require(atom.content() == 1, "atom coefficients share a common divisor");
        }
    }
    f.finalize(report);
}

// ---------------------------------------------------------------------------
// criterion 6: non-ascent mechanics at p = 2, d = 3

void check_fd_powers(CheckReport& report, const PapercheckParams&) {
    Failures f;
    FpPoly fd = parse_fp_poly("x^2+x+1", 2);
    std::size_t power = 1;
    for (int n = 0; n <= 4; ++n) {
        FpPoly substituted = fp_poly_substitute_power(fd, power);
        f.require(is_irreducible_oracle(substituted),
                  "f_d(x^(3^" + std::to_string(n) + ")) reducible");
        power *= 3;
    }
    f.finalize(report);
}

void check_nonascent_atom_test(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    FpExpr fd = parse_fp_expr("x^2+x+1", 2);
    PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(2, 3, params.depth);
    AtomTestBudget budget;
    budget.power_budget = params.power_budget;
    budget.split_cap = params.split_cap;
    ExprAtomVerdict verdict = atom_test_bounded(fd, spec, params.depth, budget);
    f.require(verdict.status == AtomTestStatus::Reducible, "x^2+x+1 not found reducible");
    if (verdict.witness) {
        FpExpr expected;
        expected.add_term(Rational(1), FpElem{1, 2});
        expected.add_term(Rational(1, 2), FpElem{1, 2});
        expected.add_term(Rational(0), FpElem{1, 2});
        f.require(verdict.witness->first == expected, "left witness is not x + x^(1/2) + 1");
        f.require(verdict.witness->second == expected, "right witness is not x + x^(1/2) + 1");
        f.require(verdict.witness->first * verdict.witness->second == fd,
                  "witness product mismatch");
        std::vector<Generator> gens = spec.generators_at(params.depth);
        for (const char* key : {"0", "1/2", "1"}) {
            auto it = verdict.support_certificates.find(key);
            f.require(it != verdict.support_certificates.end(),
                      std::string("missing certificate for exponent ") + key);
            if (it != verdict.support_certificates.end()) {
                f.require(certificate_sum(it->second, gens) == parse_rational(key),
                          std::string("certificate sum mismatch for exponent ") + key);
            }
        }
        report.witness["left"] = verdict.witness->first.str();
        report.witness["right"] = verdict.witness->second.str();
    } else {
        f.require(false, "no witness returned");
    }
    f.finalize(report);
}

void check_claim_support(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    Rng rng(params.seed ^ fnv1a("nonascent-claim-support"));
    const int claim_depth = 3;
    PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(2, 3, claim_depth);
    std::vector<Generator> gens = spec.generators_at(claim_depth);
    FpExpr fd = parse_fp_expr("x^2+x+1", 2);
    for (int i = 0; i < params.claim_support_samples; ++i) {
        int n = 1 + static_cast<int>(rng.below(3));
        FpExpr fdn = substitute_power(fd, rational_pow(Rational(1, 2), n));
        FpExpr b_expr;
        while (b_expr.is_zero()) {
            int terms = 1 + static_cast<int>(rng.below(3));
            for (int j = 0; j < terms; ++j) {
                Rational exponent(0);
                bool nonzero = false;
                for (const Generator& g : gens) {
                    auto c = rng.below(3);
                    if (c > 0) nonzero = true;
                    exponent += g.value * Rational(BigInt(c));
                }
                if (!nonzero && rng.coin()) continue;  // allow a constant term sometimes
                b_expr.add_term(exponent, FpElem{1, 2});
            }
        }
        FpExpr product = fdn * b_expr;
        auto quotient = divide_exact(product, fdn);
        f.require(quotient.has_value(), "exact division failed");
        if (quotient) {
            f.require(*quotient == b_expr, "recovered quotient differs from the cofactor");
            SupportReport support = support_in_monoid(*quotient, spec, claim_depth);
            f.require(support.all_certified, "quotient support not certified at depth 3");
        }
    }
    f.finalize(report);
}

// ---------------------------------------------------------------------------
// criterion 7: subring criteria and witnesses

Rational random_nonzero_rational(Rng& rng, int den_bound) {
    while (true) {
        long long num = rng.int_in(-9, 9);
        if (num == 0) continue;
        long long den = rng.int_in(1, den_bound);
        return Rational(BigInt(num), BigInt(den));
    }
}

struct ZqSample {
    SubringPoly poly;
    /// Order coefficient as placed by the construction.
    Rational order_coeff;
};

ZqSample random_zq_member(Rng& rng, bool force_fractional_order) {
    int order = force_fractional_order ? static_cast<int>(rng.int_in(2, 4))
                                       : static_cast<int>(rng.int_in(0, 4));
    std::vector<RatFunc> coeffs(6);
    Rational lead;
    if (force_fractional_order) {
        while (true) {
            lead = random_nonzero_rational(rng, 4);
            if (!lead.is_integer()) break;
        }
    } else if (order <= 1) {
        lead = Rational(rng.int_in(1, 9) * (rng.coin() ? 1 : -1));
    } else {
        lead = random_nonzero_rational(rng, 4);
    }
    coeffs[static_cast<std::size_t>(order)] = RatFunc(lead);
    for (int i = order + 1; i < 6; ++i) {
        if (rng.coin()) continue;
        if (i <= 1) {
            coeffs[static_cast<std::size_t>(i)] = RatFunc(Rational(rng.int_in(-9, 9)));
        } else {
            coeffs[static_cast<std::size_t>(i)] = RatFunc(random_nonzero_rational(rng, 4));
        }
    }
    return {SubringPoly(std::move(coeffs)), lead};
}

void check_subring_criterion(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    SubringSpec spec{TopField::Q};
    SubringPoly half_x2 = parse_subring_poly("(1/2)*x^2");
    f.require(!is_atomic_element(half_x2, spec), "(1/2)x^2 wrongly atomic");
    SubringPoly just_x = parse_subring_poly("x");
    f.require(is_atomic_element(just_x, spec), "x wrongly non-atomic");
    Rng rng(params.seed ^ fnv1a("subring-criterion"));
    for (int i = 0; i < params.subring_corpus_samples; ++i) {
        ZqSample sample = random_zq_member(rng, i % 3 == 0);
        bool expected = sample.order_coeff.is_integer();
        f.require(is_atomic_element(sample.poly, spec) == expected,
                  "criterion mismatch on sample " + std::to_string(i));
    }
    f.finalize(report);
}

RatFunc random_qs_coeff(Rng& rng) {
    RatFunc s = RatFunc::var_s();
    RatFunc num = RatFunc(Rational(rng.int_in(-5, 5)));
    if (rng.coin()) num = num + RatFunc(Rational(rng.int_in(1, 5))) * s;
    RatFunc den = RatFunc(Rational(rng.int_in(1, 3)));
    if (rng.below(4) == 0) den = den + s;
    if (num.is_zero()) num = RatFunc(1);
    return num / den;
}

SubringPoly random_zk_member(Rng& rng) {
    std::vector<RatFunc> coeffs(6);
    int order = static_cast<int>(rng.int_in(0, 4));
    for (int i = order; i < 6; ++i) {
        if (i > order && rng.coin()) continue;
        if (i <= 1) {
            coeffs[static_cast<std::size_t>(i)] = RatFunc(Rational(rng.int_in(-9, 9)));
        } else {
            coeffs[static_cast<std::size_t>(i)] = random_qs_coeff(rng);
        }
    }
    if (coeffs[static_cast<std::size_t>(order)].is_zero()) {
        coeffs[static_cast<std::size_t>(order)] =
            order <= 1 ? RatFunc(Rational(1 + rng.int_in(0, 5))) : random_qs_coeff(rng);
    }
    return SubringPoly(std::move(coeffs));
}

void check_subring_witnesses(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    Rng rng(params.seed ^ fnv1a("subring-witnesses"));
    SubringSpec mid{TopField::Q};
    for (int i = 0; i < params.subring_corpus_samples; ++i) {
        SubringPoly g = random_zq_member(rng, i % 2 == 0).poly;
        BigInt s = almost_atomic_witness(g, mid);
        f.require(s > 0, "witness not positive");
        SubringPoly scaled = SubringPoly::constant(RatFunc(Rational(s))) * g;
        f.require(is_atomic_element(scaled, mid), "s*f fails the criterion");
    }
    SubringSpec top{TopField::Qs};
    for (int i = 0; i < params.subring_corpus_samples; ++i) {
        SubringPoly g = random_zk_member(rng);
        SubringPoly cofactor = quasi_atomic_witness(g, top);
        f.require(membership_subring(cofactor, top), "cofactor not a member");
        SubringPoly product = cofactor * g;
        f.require(is_atomic_element(product, top), "g*f fails the criterion");
        f.require(product.order_coeff() == RatFunc(1), "product order coefficient not 1");
    }
    f.finalize(report);
}

void check_subring_not_almost_atomic(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    Rng rng(params.seed ^ fnv1a("subring-not-almost"));
    SubringSpec top{TopField::Qs};
    RatFunc kappa = RatFunc::var_s();
    for (int i = 0; i < params.not_almost_samples; ++i) {
        SubringPoly g = random_zk_member(rng);
        if (!is_atomic_element(g, top)) {
            // force an integer order coefficient
            std::vector<RatFunc> coeffs = g.coeffs();
            coeffs[static_cast<std::size_t>(g.order())] = RatFunc(Rational(1 + rng.int_in(0, 5)));
            g = SubringPoly(std::move(coeffs));
        }
        NonAlmostAtomicRecord record = not_almost_atomic_witness(top, kappa, g);
        f.require(!record.order_coeff_in_base, "product order coefficient unexpectedly in Z");
    }
    bool rejected = false;
    try {
        not_almost_atomic_witness(top, RatFunc(Rational(1, 2)), parse_subring_poly("x"));
    } catch (const std::domain_error&) {
        rejected = true;
    }
    f.require(rejected, "kappa = 1/2 not rejected");
    f.finalize(report);
}

void check_subring_descent(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    DescentChain chain = infinite_descent_demo(Rational(1, 2), BigInt(2), params.descent_length);
    f.require(chain.strictly_proper, "descent chain not strictly proper");
    f.require(static_cast<int>(chain.steps.size()) == params.descent_length, "chain length wrong");
    for (const DescentStep& step : chain.steps) {
        f.require(step.member, "cofactor not a member at k=" + std::to_string(step.k));
        f.require(!step.atomic, "cofactor unexpectedly atomic at k=" + std::to_string(step.k));
        f.require(step.cofactor_coeff == rational_pow(Rational(1, 2), step.k + 1),
                  "cofactor coefficient wrong at k=" + std::to_string(step.k));
    }
    f.finalize(report);
}

// ---------------------------------------------------------------------------
// criterion 8: constraint machinery for the quasi-atomicity refutation

void check_claim2(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    auto frozen = claim2_polynomials(BigInt(1), {BigInt(0), BigInt(0)}, 0, 2);
    QExpr x = QExpr::monomial(Rational(1), Rational(1));
    f.require(frozen[0] == -x, "Q_{s+1} != -x for z = (0,0)");
    f.require(frozen[1] == x * x, "Q_{s+2} != x^2 for z = (0,0)");
    auto base = claim2_polynomials(BigInt(2), {BigInt(1)}, 0, 1);
    QExpr expected_base = (-x) + QExpr::constant(Rational(1, 2));
    f.require(base[0] == expected_base, "Q_{s+1} != -x + 1/2 for z_s = 2");
    Rng rng(params.seed ^ fnv1a("subring-claim2"));
    for (int i = 0; i < 20; ++i) {
        BigInt z_s(rng.int_in(1, 5) * (rng.coin() ? 1 : -1));
        int s_index = static_cast<int>(rng.int_in(0, 3));
        int len = static_cast<int>(rng.int_in(1, 5));
        std::vector<BigInt> tail;
        for (int j = 0; j < len; ++j) tail.emplace_back(rng.int_in(-5, 5));
        auto qs = claim2_polynomials(z_s, tail, s_index, s_index + len);
        f.require(static_cast<int>(qs.size()) == len, "wrong number of polynomials");
        for (int k = 0; k < len; ++k) {
            f.require(!qs[static_cast<std::size_t>(k)].is_constant(), "Q_k constant");
            f.require(qs[static_cast<std::size_t>(k)].degree() == Rational(k + 1),
                      "deg Q_k != k - s");
        }
    }
    f.finalize(report);
}

struct Claim1Case {
    std::vector<std::string> T;
    int e;
    std::string gamma;
    bool expect_violation;
};

const std::vector<Claim1Case>& claim1_corpus() {
    static const std::vector<Claim1Case> cases{
        {{"1"}, 2, "t", true},          {{"1", "0"}, 2, "t", true},
        {{"0"}, 1, "t", false},         {{"x^2"}, 2, "t", false},
        {{"2", "x"}, 2, "2*t", true},   {{"1"}, 0, "t", false},
        {{"3"}, 2, "3", true},          {{"x + 1"}, 2, "t", true},
    };
    return cases;
}

void check_claim1(CheckReport& report, const PapercheckParams&) {
    Failures f;
    int index = 0;
    for (const Claim1Case& c : claim1_corpus()) {
        std::vector<SubringPoly> T;
        for (const std::string& text : c.T) T.push_back(parse_subring_poly(text));
        Claim1Report result = claim1_constraints(T, c.e, parse_ratfunc(c.gamma));
        f.require(result.any_violation == c.expect_violation,
                  "violation flag mismatch on corpus case " + std::to_string(index));
        if (c.expect_violation) {
            bool has_entry = false;
            for (const Claim1Entry& entry : result.entries) {
                if (!entry.violations.empty()) has_entry = true;
            }
            f.require(has_entry, "no violating entry on corpus case " + std::to_string(index));
        }
        ++index;
    }
    f.finalize(report);
}

void check_refute_corpus(CheckReport& report, const PapercheckParams& params) {
    Failures f;
    nlohmann::json corpus = nlohmann::json::parse(refute_corpus_json());
    f.require(corpus.size() == 20, "corpus must hold 20 candidates");
    SubringSpec spec{TopField::Qst};
    ProbeBudget budget{params.probe_x_degree, params.probe_y_degree,
                       params.probe_coeff_complexity};
    int valid = 0, invalid = 0, unknown = 0;
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& candidate : corpus) {
        RYPoly multiplier = parse_ry_poly(candidate.at("F").get<std::string>());
        std::vector<RYPoly> factors;
        for (const auto& text : candidate.at("factors")) {
            factors.push_back(parse_ry_poly(text.get<std::string>()));
        }
        RefuteVerdict verdict = refute_quasi_atomic_candidate(multiplier, factors, spec, budget);
        switch (verdict.status) {
            case RefuteStatus::Valid: ++valid; break;
            case RefuteStatus::Invalid: ++invalid; break;
            case RefuteStatus::UnknownAtBudget: ++unknown; break;
        }
        verdicts.push_back({{"F", candidate.at("F")},
                            {"status", verdict.status == RefuteStatus::Valid      ? "valid"
                                       : verdict.status == RefuteStatus::Invalid ? "invalid"
                                                                                 : "unknown"},
                            {"reason", verdict.reason}});
    }
    f.require(valid == 0, "a candidate factorization was accepted as valid");
    report.witness["verdicts"] = verdicts;
    report.witness["invalid"] = invalid;
    report.witness["unknown"] = unknown;
    f.finalize(report);
}

// ---------------------------------------------------------------------------

std::vector<CheckDef> build_checks(const PapercheckParams& params) {
    std::vector<CheckDef> defs;
    auto add = [&](std::string id, std::string suite, int criterion, std::string anchor,
                   CheckFn fn) {
        defs.push_back({std::move(id), std::move(suite), criterion, std::move(anchor),
                        std::move(fn)});
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{2, 3}, {3, 2}, {5, 4}, {7, 2}};
    std::vector<std::pair<std::int64_t, std::int64_t>> atom_pairs{{2, 3}, {3, 2}};
    if (params.only_q != 0 && params.only_r != 0) {
        pairs = {{params.only_q, params.only_r}};
        atom_pairs = pairs;
    }
    for (auto [q, r] : pairs) {
        std::string tag = "q" + std::to_string(q) + "-r" + std::to_string(r);
        add("mqr-schedule-" + tag, "prop-mqr", 1, "ell strictly increasing, r^(ell_n - ell_{n-1}) > 2q^(n+1)",
            [q, r](CheckReport& rep, const PapercheckParams& p) { check_mqr_schedule(rep, p, q, r); });
        add("mqr-interleaving-" + tag, "prop-mqr", 1, "1 > b_n > a_n > b_{n+1}",
            [q, r](CheckReport& rep, const PapercheckParams& p) {
                check_mqr_interleaving(rep, p, q, r);
            });
        add("mqr-sum-identity-" + tag, "prop-mqr", 1, "a_n + b_n = q^(-n)",
            [q, r](CheckReport& rep, const PapercheckParams& p) {
                check_mqr_sum_identity(rep, p, q, r);
            });
        add("mqr-localization-" + tag, "prop-mqr", 1, "generators lie in Z[1/q, 1/r]",
            [q, r](CheckReport& rep, const PapercheckParams& p) {
                check_mqr_localization(rep, p, q, r);
            });
        add("mqr-unit-fractions-" + tag, "prop-mqr", 1, "1/q^n certified in M at depth n",
            [q, r](CheckReport& rep, const PapercheckParams& p) {
                check_mqr_unit_fractions(rep, p, q, r);
            });
    }
    for (auto [q, r] : atom_pairs) {
        std::string tag = "q" + std::to_string(q) + "-r" + std::to_string(r);
        add("mqr-atoms-" + tag, "prop-mqr", 2, "a_n and b_n are atoms at every probed depth",
            [q, r](CheckReport& rep, const PapercheckParams& p) { check_mqr_atoms(rep, p, q, r); });
        add("mqr-nondivisibility-" + tag, "prop-mqr", 2, "b_n does not divide a_n",
            [q, r](CheckReport& rep, const PapercheckParams& p) {
                check_mqr_nondivisibility(rep, p, q, r);
            });
    }
    add("binomial-agreement", "binomials", 3,
        "x^t - a irreducible iff gcd(t,(p-1)/e)=1, rad(t) | e, and 4|t implies 4|p-1",
        check_binomial_agreement);
    add("binomial-primitive-roots", "binomials", 3,
        "x^((p-1)^n) - a irreducible for primitive roots a, p = 1 mod 4",
        check_binomial_primitive_roots);
    add("trinomial-construction", "trinomials", 4,
        "x^(2^k) - 2a x^(2^(k-1)) - 1 irreducible for the recursive parameter a",
        check_trinomials);
    add("ascent-fp", "ascent", 5, "maximal decomposition + unit content over F_p reassembles",
        check_ascent_fp);
    add("ascent-z", "ascent", 5, "maximal decomposition + gcd content over Z reassembles",
        check_ascent_z);
    add("nonascent-fd-powers", "nonascent", 6, "x^(2*3^n) + x^(3^n) + 1 irreducible over F_2",
        check_fd_powers);
    add("nonascent-atom-test", "nonascent", 6,
        "x^2 + x + 1 reducible in F_2[M_{2,3}] with witness (x + x^(1/2) + 1)^2",
        check_nonascent_atom_test);
    add("nonascent-claim-support", "nonascent", 6,
        "supports of recovered cofactors are certified in M", check_claim_support);
    add("subring-criterion", "subring", 7, "atomic iff the order coefficient is an integer",
        check_subring_criterion);
    add("subring-witnesses", "subring", 7, "almost/quasi-atomic witnesses yield atomic products",
        check_subring_witnesses);
    add("subring-not-almost-atomic", "subring", 7,
        "kappa x^2 forces order coefficients outside Z", check_subring_not_almost_atomic);
    add("subring-descent", "subring", 7, "q x^2 = a^k ((q/a^k) x^2) is a proper chain",
        check_subring_descent);
    add("subring-claim2", "subring", 8, "deg Q_k = k - s and every Q_k nonconstant", check_claim2);
    add("subring-claim1", "subring", 8, "low-degree coefficients of p_i must be integers",
        check_claim1);
    add("subring-refute", "subring", 8, "no claimed factorization of F((s x^2)y + (t x^2)) is valid",
        check_refute_corpus);
    return defs;
}

}  // namespace

const std::vector<std::string>& papercheck_suites() {
    static const std::vector<std::string> suites{"prop-mqr", "binomials", "trinomials", "ascent",
                                                 "nonascent", "subring", "all"};
    return suites;
}

std::vector<CheckReport> run_papercheck(const std::string& suite, const PapercheckParams& params) {
    const auto& suites = papercheck_suites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    std::vector<CheckDef> defs = build_checks(params);
    std::vector<CheckDef> selected;
    for (CheckDef& def : defs) {
        if (suite == "all" || def.suite == suite) selected.push_back(std::move(def));
    }
    std::vector<std::future<CheckReport>> futures;
    futures.reserve(selected.size());
    for (const CheckDef& def : selected) {
        futures.push_back(std::async(std::launch::async, [&def, &params]() {
            CheckReport report;
            report.id = def.id;
            report.suite = def.suite;
            report.criterion = def.criterion;
            report.anchor = def.anchor;
            report.budgets = {{"seed", params.seed},
                              {"depth", params.depth},
                              {"power_budget", params.power_budget},
                              {"split_cap", params.split_cap}};
            auto start = std::chrono::steady_clock::now();
            try {
                def.fn(report, params);
            } catch (const std::exception& e) {
                report.verdict = "fail";
                report.detail = std::string("exception: ") + e.what();
            }
            auto end = std::chrono::steady_clock::now();
            report.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
            return report;
        }));
    }
    std::vector<CheckReport> reports;
    reports.reserve(futures.size());
    for (auto& fut : futures) reports.push_back(fut.get());
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return reports;
}

const char* refute_corpus_json() {
    return R"JSON([
  {"F": "1", "factors": ["x", "x"]},
  {"F": "1", "factors": ["x^2*y", "t"]},
  {"F": "y", "factors": ["s*x^2*y + t*x^2"]},
  {"F": "2", "factors": ["s*x^2*y + t*x^2"]},
  {"F": "1", "factors": ["x", "x", "s*y + t"]},
  {"F": "1", "factors": ["x^2", "s*y + t"]},
  {"F": "1", "factors": ["x", "s*x*y + t*x"]},
  {"F": "x", "factors": ["x", "x", "s*x*y + t*x"]},
  {"F": "s*y", "factors": ["s*y", "s*x^2*y + t*x^2"]},
  {"F": "1", "factors": ["(1/2)*x^2", "2*s*y + 2*t"]},
  {"F": "x + 1", "factors": ["x + 1", "s*y + t", "x^2"]},
  {"F": "1", "factors": ["1", "s*x^2*y + t*x^2"]},
  {"F": "1", "factors": ["s*x^2*y + t*x^2"]},
  {"F": "2", "factors": ["2", "s*x^2*y + t*x^2"]},
  {"F": "y", "factors": ["y", "s*x^2*y + t*x^2"]},
  {"F": "y + 1", "factors": ["y + 1", "s*x^2*y + t*x^2"]},
  {"F": "2*y + 1", "factors": ["2*s*x^2*y^2 + s*x^2*y + 2*t*x^2*y + t*x^2"]},
  {"F": "x^2", "factors": ["x", "x", "s*x^2*y + t*x^2"]},
  {"F": "4", "factors": ["4", "s*x^2*y + t*x^2"]},
  {"F": "1", "factors": ["2", "(s/2)*x^2*y + (t/2)*x^2"]}
])JSON";
}

}  // namespace monoidlab
