#include "monoidlab/ascent.hpp"
#include "monoidlab/fp.hpp"
#include "monoidlab/papercheck.hpp"
#include "monoidlab/parser.hpp"
#include "monoidlab/puiseux.hpp"
#include "monoidlab/report.hpp"
#include "monoidlab/semidomain.hpp"
#include "monoidlab/subring.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace monoidlab;

namespace {

std::map<std::string, unsigned long long> cert_to_map(const MembershipCertificate& cert) {
    return std::map<std::string, unsigned long long>(cert.coeffs.begin(), cert.coeffs.end());
}

std::optional<std::map<std::string, unsigned long long>> opt_cert_to_map(
    const std::optional<MembershipCertificate>& cert) {
    if (!cert) return std::nullopt;
    return cert_to_map(*cert);
}

PuiseuxMonoidSpec make_spec(std::int64_t q, std::int64_t r, int depth,
                            const std::vector<std::string>& explicit_gens) {
    if (!explicit_gens.empty()) {
        std::vector<Rational> values;
        values.reserve(explicit_gens.size());
        for (const std::string& text : explicit_gens) values.push_back(parse_rational(text));
        return PuiseuxMonoidSpec::explicit_monoid(std::move(values));
    }
    return PuiseuxMonoidSpec::mqr(q, r, depth);
}

SubringSpec ring_by_name(const std::string& name) {
    if (name == "ZQ") return SubringSpec{TopField::Q};
    if (name == "ZKs") return SubringSpec{TopField::Qs};
    if (name == "ZKst") return SubringSpec{TopField::Qst};
    throw std::invalid_argument("ring must be ZQ, ZKs, or ZKst");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic workbench for Puiseux monoids, monoid semidomains, and "
              "polynomial subrings";

    // ---- exact rational arithmetic ----
    m.def(
        "make_rational",
        [](long long n, long long d) { return make_rational(BigInt(n), BigInt(d)).str(); },
        py::arg("n"), py::arg("d"));
    m.def(
        "padic_valuation",
        [](const std::string& q, long long p) {
            return padic_valuation(parse_rational(q), BigInt(p));
        },
        py::arg("q"), py::arg("p"));
    m.def(
        "in_localization",
        [](const std::string& q, const std::vector<long long>& primes) {
            std::vector<BigInt> ps(primes.begin(), primes.end());
            return in_localization(parse_rational(q), ps);
        },
        py::arg("q"), py::arg("primes"));
    m.def(
        "ratfunc_eval",
        [](const std::string& text) { return parse_ratfunc(text).str(); },
        py::arg("text"), "normalize an expression in s and t");
    m.def(
        "ratfunc_eq",
        [](const std::string& a, const std::string& b) {
            return parse_ratfunc(a) == parse_ratfunc(b);
        },
        py::arg("a"), py::arg("b"));

    // ---- finite field ----
    m.def(
        "multiplicative_order",
        [](long long a, long long p) { return multiplicative_order({a, p}); }, py::arg("a"),
        py::arg("p"));
    m.def(
        "primitive_roots",
        [](long long p) {
            std::vector<long long> out;
            for (const FpElem& root : primitive_roots(p)) out.push_back(root.value);
            return out;
        },
        py::arg("p"));
    m.def(
        "binomial_irreducible",
        [](long long t, long long a, long long p) { return binomial_irreducible(t, {a, p}); },
        py::arg("t"), py::arg("a"), py::arg("p"));
    m.def(
        "trinomial_parameter", [](long long p) { return trinomial_parameter(p).value; },
        py::arg("p"));
    m.def(
        "is_irreducible",
        [](const std::string& poly, long long p) {
            return is_irreducible_oracle(parse_fp_poly(poly, p));
        },
        py::arg("poly"), py::arg("p"), "criterion-independent irreducibility oracle");
    m.def(
        "factorize",
        [](const std::string& poly, long long p) {
            FpFactorization fac = factorize(parse_fp_poly(poly, p));
            std::vector<std::pair<std::string, int>> factors;
            for (const auto& [g, mult] : fac.factors) factors.emplace_back(g.str(), mult);
            return py::make_tuple(fac.unit, factors);
        },
        py::arg("poly"), py::arg("p"));
    m.def(
        "frobenius_power_check",
        [](const std::string& poly, long long p, int n) {
            return frobenius_power_check(parse_fp_poly(poly, p), n);
        },
        py::arg("poly"), py::arg("p"), py::arg("n"));

    // ---- Puiseux monoid ----
    m.def(
        "ell_sequence", [](long long q, long long r, int n) { return ell_sequence(q, r, n); },
        py::arg("q"), py::arg("r"), py::arg("n"));
    m.def(
        "generators",
        [](long long q, long long r, int n) {
            auto [a, b] = generators(GeneratorSchedule{q, r, {}}, n);
            return py::make_tuple(a.str(), b.str());
        },
        py::arg("q"), py::arg("r"), py::arg("n"));
    m.def(
        "membership",
        [](const std::string& target, long long q, long long r, int depth,
           const std::vector<std::string>& gens) {
            return opt_cert_to_map(membership(parse_rational(target), make_spec(q, r, depth, gens),
                                              depth));
        },
        py::arg("target"), py::arg("q") = 2, py::arg("r") = 3, py::arg("depth") = 6,
        py::arg("gens") = std::vector<std::string>{});
    m.def(
        "divides",
        [](const std::string& b, const std::string& c, long long q, long long r, int depth,
           const std::vector<std::string>& gens) {
            return opt_cert_to_map(divides(parse_rational(b), parse_rational(c),
                                           make_spec(q, r, depth, gens), depth));
        },
        py::arg("b"), py::arg("c"), py::arg("q") = 2, py::arg("r") = 3, py::arg("depth") = 6,
        py::arg("gens") = std::vector<std::string>{});
    m.def(
        "is_atom",
        [](const std::string& label, long long q, long long r, int depth,
           const std::vector<std::string>& gens) {
            AtomVerdict verdict = is_atom_bounded(label, make_spec(q, r, depth, gens), depth);
            return py::make_tuple(verdict.is_atom_at_depth, opt_cert_to_map(verdict.refutation));
        },
        py::arg("label"), py::arg("q") = 2, py::arg("r") = 3, py::arg("depth") = 6,
        py::arg("gens") = std::vector<std::string>{});
    m.def(
        "factorizations",
        [](const std::string& target, long long q, long long r, int depth,
           const std::vector<std::string>& gens) {
            std::vector<std::map<std::string, unsigned long long>> out;
            for (const auto& cert :
                 factorizations_bounded(parse_rational(target), make_spec(q, r, depth, gens), depth)) {
                out.push_back(cert_to_map(cert));
            }
            return out;
        },
        py::arg("target"), py::arg("q") = 2, py::arg("r") = 3, py::arg("depth") = 6,
        py::arg("gens") = std::vector<std::string>{});

    // ---- monoid semidomain ----
    m.def(
        "expr_structure",
        [](const std::string& expr, long long p) {
            FpExpr f = parse_fp_expr(expr, p);
            auto s = structure(f);
            std::vector<std::string> support;
            for (const Rational& e : s.support) support.push_back(e.str());
            return py::dict(py::arg("support") = support, py::arg("order") = s.order.str(),
                            py::arg("degree") = s.degree.str(),
                            py::arg("order_coeff") = s.order_coeff.value,
                            py::arg("leading_coeff") = s.leading_coeff.value);
        },
        py::arg("expr"), py::arg("p"));
    m.def(
        "substitute_power",
        [](const std::string& expr, long long p, const std::string& power) {
            return substitute_power(parse_fp_expr(expr, p), parse_rational(power)).str();
        },
        py::arg("expr"), py::arg("p"), py::arg("power"));
    m.def(
        "clear_denominators",
        [](const std::string& expr, long long p) {
            auto [standard, d] = clear_denominators(parse_fp_expr(expr, p));
            return py::make_tuple(standard.str(), d.str());
        },
        py::arg("expr"), py::arg("p"));
    m.def(
        "support_in_monoid",
        [](const std::string& expr, long long p, long long q, long long r, int depth) {
            SupportReport report =
                support_in_monoid(parse_fp_expr(expr, p), PuiseuxMonoidSpec::mqr(q, r, depth), depth);
            std::vector<py::tuple> entries;
            for (const SupportEntry& entry : report.entries) {
                entries.push_back(
                    py::make_tuple(entry.exponent.str(), opt_cert_to_map(entry.certificate)));
            }
            return py::make_tuple(report.all_certified, entries);
        },
        py::arg("expr"), py::arg("p"), py::arg("q") = 2, py::arg("r") = 3, py::arg("depth") = 6);
    m.def(
        "atom_test",
        [](const std::string& expr, long long p, long long q, long long r, int depth,
           int power_budget) {
            AtomTestBudget budget;
            budget.power_budget = power_budget;
            ExprAtomVerdict verdict = atom_test_bounded(parse_fp_expr(expr, p),
                                                        PuiseuxMonoidSpec::mqr(q, r, depth), depth,
                                                        budget);
            std::string status = verdict.status == AtomTestStatus::Unit        ? "unit"
                                 : verdict.status == AtomTestStatus::Reducible ? "reducible"
                                 : verdict.status == AtomTestStatus::AtomAtDepth
                                     ? "atom-at-depth"
                                     : "unknown-at-budget";
            std::optional<std::pair<std::string, std::string>> witness;
            if (verdict.witness) {
                witness = {verdict.witness->first.str(), verdict.witness->second.str()};
            }
            return py::make_tuple(status, witness);
        },
        py::arg("expr"), py::arg("p"), py::arg("q") = 2, py::arg("r") = 3, py::arg("depth") = 6,
        py::arg("power_budget") = 2);
    m.def(
        "ascent_factorization_fp",
        [](const std::string& poly, long long p) {
            AscentResultFp result = ascent_factorization(parse_fp_poly(poly, p));
            std::vector<std::string> atoms;
            for (const FpPoly& atom : result.atoms) atoms.push_back(atom.str());
            return py::make_tuple(result.unit, atoms);
        },
        py::arg("poly"), py::arg("p"));
    m.def(
        "ascent_factorization_z",
        [](const std::string& poly) {
            AscentResultZ result = ascent_factorization(parse_int_poly(poly));
            std::vector<std::string> atoms;
            for (const IntPoly& atom : result.atoms) atoms.push_back(atom.str());
            return py::make_tuple(result.constant.str(), atoms);
        },
        py::arg("poly"));

    // ---- subrings ----
    m.def(
        "subring_member",
        [](const std::string& expr, const std::string& ring) {
            return membership_subring(parse_subring_poly(expr), ring_by_name(ring));
        },
        py::arg("expr"), py::arg("ring") = "ZQ");
    m.def(
        "subring_atomic",
        [](const std::string& expr, const std::string& ring) {
            return is_atomic_element(parse_subring_poly(expr), ring_by_name(ring));
        },
        py::arg("expr"), py::arg("ring") = "ZQ");
    m.def(
        "almost_atomic_witness",
        [](const std::string& expr, const std::string& ring) {
            return almost_atomic_witness(parse_subring_poly(expr), ring_by_name(ring)).str();
        },
        py::arg("expr"), py::arg("ring") = "ZQ");
    m.def(
        "quasi_atomic_witness",
        [](const std::string& expr, const std::string& ring) {
            return quasi_atomic_witness(parse_subring_poly(expr), ring_by_name(ring)).str();
        },
        py::arg("expr"), py::arg("ring") = "ZKst");
    m.def(
        "claim2_polynomials",
        [](long long z_s, const std::vector<long long>& tail, int s_index) {
            std::vector<BigInt> t(tail.begin(), tail.end());
            std::vector<std::string> out;
            for (const QExpr& qk :
                 claim2_polynomials(BigInt(z_s), t, s_index, s_index + static_cast<int>(t.size()))) {
                out.push_back(qk.str());
            }
            return out;
        },
        py::arg("z_s"), py::arg("tail"), py::arg("s_index") = 0);
    m.def(
        "refute_candidate",
        [](const std::string& multiplier, const std::vector<std::string>& factors) {
            std::vector<RYPoly> parsed;
            parsed.reserve(factors.size());
            for (const std::string& text : factors) parsed.push_back(parse_ry_poly(text));
            RefuteVerdict verdict = refute_quasi_atomic_candidate(
                parse_ry_poly(multiplier), parsed, SubringSpec{TopField::Qst});
            std::string status = verdict.status == RefuteStatus::Valid      ? "valid"
                                 : verdict.status == RefuteStatus::Invalid ? "invalid"
                                                                           : "unknown-at-budget";
            return py::make_tuple(status, verdict.reason);
        },
        py::arg("multiplier"), py::arg("factors"));

    // ---- papercheck ----
    m.def(
        "papercheck",
        [](const std::string& suite, std::uint64_t seed) {
            PapercheckParams params;
            params.seed = seed;
            std::vector<CheckReport> reports = run_papercheck(suite, params);
            return reports_to_json(reports).dump();
        },
        py::arg("suite") = "all", py::arg("seed") = PapercheckParams{}.seed,
        "run a verification suite; returns the JSON report");
}
