#include "monoidlab/ascent.hpp"
#include "monoidlab/fp.hpp"
#include "monoidlab/papercheck.hpp"
#include "monoidlab/parser.hpp"
#include "monoidlab/puiseux.hpp"
#include "monoidlab/report.hpp"
#include "monoidlab/semidomain.hpp"
#include "monoidlab/subring.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace monoidlab;

void render_text(const json& value, std::ostream& out, const std::string& prefix) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items()) {
            if (child.is_object() || child.is_array()) {
                out << prefix << key << ":\n";
                render_text(child, out, prefix + "  ");
            } else {
                out << prefix << key << ": " << (child.is_string() ? child.get<std::string>() : child.dump())
                    << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& child : value) {
            if (child.is_object() || child.is_array()) {
                out << prefix << "-\n";
                render_text(child, out, prefix + "  ");
            } else {
                out << prefix << "- "
                    << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
            }
        }
    } else {
        out << prefix << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void emit(const json& value, const std::string& format) {
    if (format == "json") {
        std::cout << value.dump(2) << "\n";
    } else {
        render_text(value, std::cout, "");
    }
}

json certificate_json(const MembershipCertificate& cert) {
    json j = json::object();
    for (const auto& [label, count] : cert.coeffs) j[label] = count;
    return j;
}

json optional_certificate_json(const std::optional<MembershipCertificate>& cert) {
    if (!cert) return nullptr;
    return certificate_json(*cert);
}

PuiseuxMonoidSpec spec_from_options(std::int64_t q, std::int64_t r, const std::string& gens,
                                    int depth) {
    if (!gens.empty()) {
        std::vector<Rational> values;
        std::stringstream stream(gens);
        std::string item;
        while (std::getline(stream, item, ',')) {
            values.push_back(parse_rational(item));
        }
        return PuiseuxMonoidSpec::explicit_monoid(std::move(values));
    }
    return PuiseuxMonoidSpec::mqr(q, r, depth);
}

SubringSpec ring_from_name(const std::string& name) {
    if (name == "ZQ") return SubringSpec{TopField::Q};
    if (name == "ZKs") return SubringSpec{TopField::Qs};
    if (name == "ZKst") return SubringSpec{TopField::Qst};
    throw CLI::ValidationError("--ring", "expected ZQ, ZKs, or ZKst");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for Puiseux monoids, monoid semidomains, "
                 "and polynomial subrings"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    // ---- monoid ----
    auto* monoid = app.add_subcommand("monoid", "Puiseux monoid computations");
    monoid->require_subcommand(1);
    std::int64_t q = 2, r = 3;
    int depth = 6, n = 4, n_max = 6;
    std::string gens, target, lhs, rhs, index;

    auto add_spec_options = [&](CLI::App* cmd, bool with_depth = true) {
        cmd->add_option("--q", q, "schedule prime q");
        cmd->add_option("--r", r, "schedule base r");
        cmd->add_option("--gens", gens, "explicit generators, comma separated");
        if (with_depth) cmd->add_option("--depth", depth, "truncation depth");
    };

    auto* monoid_gens = monoid->add_subcommand("gens", "generator pairs a_n, b_n");
    monoid_gens->add_option("--q", q)->required();
    monoid_gens->add_option("--r", r)->required();
    monoid_gens->add_option("--n", n, "largest index");
    monoid_gens->callback([&] {
        GeneratorSchedule schedule{q, r, {}};
        json rows = json::array();
        for (int i = 1; i <= n; ++i) {
            auto [a, b] = generators(schedule, i);
            rows.push_back({{"n", i},
                            {"ell", schedule_ell(schedule, i)},
                            {"a", a.str()},
                            {"b", b.str()}});
        }
        emit({{"q", q}, {"r", r}, {"generators", rows}}, format);
    });

    auto* monoid_member = monoid->add_subcommand("member", "bounded membership certificate");
    add_spec_options(monoid_member);
    monoid_member->add_option("--target", target, "value to certify")->required();
    monoid_member->callback([&] {
        PuiseuxMonoidSpec spec = spec_from_options(q, r, gens, depth);
        auto cert = membership(parse_rational(target), spec, depth);
        emit({{"target", target},
              {"depth", depth},
              {"member_at_depth", cert.has_value()},
              {"certificate", optional_certificate_json(cert)}},
             format);
    });

    auto* monoid_divides = monoid->add_subcommand("divides", "additive divisibility b | c");
    add_spec_options(monoid_divides);
    monoid_divides->add_option("--b", lhs)->required();
    monoid_divides->add_option("--c", rhs)->required();
    monoid_divides->callback([&] {
        PuiseuxMonoidSpec spec = spec_from_options(q, r, gens, depth);
        auto cert = divides(parse_rational(lhs), parse_rational(rhs), spec, depth);
        emit({{"b", lhs},
              {"c", rhs},
              {"depth", depth},
              {"divides_at_depth", cert.has_value()},
              {"certificate", optional_certificate_json(cert)}},
             format);
    });

    auto* monoid_atom = monoid->add_subcommand("atomcheck", "bounded atom verdict for a generator");
    add_spec_options(monoid_atom);
    monoid_atom->add_option("--index", index, "generator label, e.g. a1")->required();
    monoid_atom->callback([&] {
        PuiseuxMonoidSpec spec = spec_from_options(q, r, gens, depth);
        AtomVerdict verdict = is_atom_bounded(index, spec, depth);
        emit({{"index", index},
              {"depth", verdict.depth},
              {"verdict", verdict.is_atom_at_depth ? "atom-at-depth" : "reducible"},
              {"refutation", optional_certificate_json(verdict.refutation)}},
             format);
    });

    auto* monoid_accp = monoid->add_subcommand("accp", "principal-ideal chain probe for 1/q^n");
    add_spec_options(monoid_accp);
    monoid_accp->add_option("--n-max", n_max, "number of probed links");
    monoid_accp->callback([&] {
        PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(q, r, depth);
        ChainReport report = accp_chain_probe(spec, n_max, depth);
        json links = json::array();
        for (const ChainLink& link : report.links) {
            links.push_back({{"n", link.index},
                             {"value", link.value.str()},
                             {"next", link.next_value.str()},
                             {"ascends", link.ascends},
                             {"proper", link.proper},
                             {"certificate", optional_certificate_json(link.ascent_certificate)}});
        }
        emit({{"depth", report.depth},
              {"all_proper", report.all_proper},
              {"stabilizes_within_probe", !report.all_proper},
              {"links", links}},
             format);
    });

    auto* monoid_factorizations =
        monoid->add_subcommand("factorizations", "all atom multisets summing to the target");
    add_spec_options(monoid_factorizations);
    monoid_factorizations->add_option("--target", target)->required();
    monoid_factorizations->callback([&] {
        PuiseuxMonoidSpec spec = spec_from_options(q, r, gens, depth);
        auto lists = factorizations_bounded(parse_rational(target), spec, depth);
        json out = json::array();
        for (const auto& cert : lists) out.push_back(certificate_json(cert));
        emit({{"target", target}, {"depth", depth}, {"factorizations", out}}, format);
    });

    // ---- ff ----
    auto* ff = app.add_subcommand("ff", "prime-field and F_p[x] computations");
    ff->require_subcommand(1);
    std::int64_t p = 2, a = 1, t = 2;
    int k = 1, frob_n = 1;
    std::string poly_text;

    auto* ff_order = ff->add_subcommand("order", "multiplicative order");
    ff_order->add_option("--p", p)->required();
    ff_order->add_option("--a", a)->required();
    ff_order->callback([&] {
        emit({{"p", p}, {"a", a}, {"order", multiplicative_order({a, p})}}, format);
    });

    auto* ff_primroots = ff->add_subcommand("primroots", "primitive roots mod p");
    ff_primroots->add_option("--p", p)->required();
    ff_primroots->callback([&] {
        json roots = json::array();
        for (const FpElem& root : primitive_roots(p)) roots.push_back(root.value);
        emit({{"p", p}, {"primitive_roots", roots}}, format);
    });

    auto* ff_binom = ff->add_subcommand("binom", "binomial irreducibility criterion vs oracle");
    ff_binom->add_option("--p", p)->required();
    ff_binom->add_option("--t", t)->required();
    ff_binom->add_option("--a", a)->required();
    ff_binom->callback([&] {
        bool criterion = binomial_irreducible(t, {a, p});
        bool oracle = is_irreducible_oracle(binomial_poly(p, t, a));
        emit({{"p", p},
              {"t", t},
              {"a", a},
              {"criterion", criterion},
              {"oracle", oracle},
              {"agree", criterion == oracle}},
             format);
    });

    auto* ff_trinom = ff->add_subcommand("trinom", "trinomial parameter and oracle check");
    ff_trinom->add_option("--p", p)->required();
    ff_trinom->add_option("--k", k, "power 2^k");
    ff_trinom->callback([&] {
        FpElem param = trinomial_parameter(p);
        json rows = json::array();
        for (int i = 1; i <= k; ++i) {
            FpPoly tri = trinomial_poly(p, i, param.value);
            rows.push_back({{"k", i}, {"poly", tri.str()}, {"irreducible", is_irreducible_oracle(tri)}});
        }
        emit({{"p", p}, {"a", param.value}, {"trinomials", rows}}, format);
    });

    auto* ff_irred = ff->add_subcommand("irred", "irreducibility oracle");
    ff_irred->add_option("--p", p)->required();
    ff_irred->add_option("--poly", poly_text)->required();
    ff_irred->callback([&] {
        FpPoly f = parse_fp_poly(poly_text, p);
        emit({{"p", p}, {"poly", f.str()}, {"irreducible", is_irreducible_oracle(f)}}, format);
    });

    auto* ff_factor = ff->add_subcommand("factor", "complete factorization over F_p");
    ff_factor->add_option("--p", p)->required();
    ff_factor->add_option("--poly", poly_text)->required();
    ff_factor->callback([&] {
        FpFactorization fac = factorize(parse_fp_poly(poly_text, p));
        json factors = json::array();
        for (const auto& [g, m] : fac.factors) {
            factors.push_back({{"poly", g.str()}, {"multiplicity", m}});
        }
        emit({{"p", p}, {"unit", fac.unit}, {"factors", factors}}, format);
    });

    auto* ff_frob = ff->add_subcommand("frobcheck", "g(x)^(p^n) == g(x^(p^n))");
    ff_frob->add_option("--p", p)->required();
    ff_frob->add_option("--poly", poly_text)->required();
    ff_frob->add_option("--n", frob_n);
    ff_frob->callback([&] {
        FpPoly g = parse_fp_poly(poly_text, p);
        emit({{"p", p}, {"poly", g.str()}, {"n", frob_n}, {"holds", frobenius_power_check(g, frob_n)}},
             format);
    });

    // ---- semidomain ----
    auto* semidomain = app.add_subcommand("semidomain", "F_p[M] polynomial expressions");
    semidomain->require_subcommand(1);
    std::string expr_text, power_text, ring_name = "ZQ";
    int budget_power = 2;
    std::uint64_t budget_splits = 1 << 16;

    auto* sd_structure = semidomain->add_subcommand("structure", "support, order, degree");
    sd_structure->add_option("--p", p)->required();
    sd_structure->add_option("--expr", expr_text)->required();
    sd_structure->callback([&] {
        FpExpr f = parse_fp_expr(expr_text, p);
        auto s = structure(f);
        json support = json::array();
        for (const Rational& e : s.support) support.push_back(e.str());
        emit({{"expr", f.str()},
              {"support", support},
              {"order", s.order.str()},
              {"degree", s.degree.str()},
              {"order_coeff", s.order_coeff.value},
              {"leading_coeff", s.leading_coeff.value}},
             format);
    });

    auto* sd_atomtest = semidomain->add_subcommand("atomtest", "bounded atom test in F_p[M]");
    sd_atomtest->add_option("--p", p)->required();
    sd_atomtest->add_option("--q", q);
    sd_atomtest->add_option("--r", r);
    sd_atomtest->add_option("--expr", expr_text)->required();
    sd_atomtest->add_option("--depth", depth);
    sd_atomtest->add_option("--budget-power", budget_power);
    sd_atomtest->add_option("--budget-splits", budget_splits);
    sd_atomtest->callback([&] {
        FpExpr f = parse_fp_expr(expr_text, p);
        PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(q, r, depth);
        AtomTestBudget budget;
        budget.power_budget = budget_power;
        budget.split_cap = budget_splits;
        ExprAtomVerdict verdict = atom_test_bounded(f, spec, depth, budget);
        json out{{"expr", f.str()},
                 {"depth", depth},
                 {"budget_power", budget_power},
                 {"status", verdict.status == AtomTestStatus::Unit        ? "unit"
                            : verdict.status == AtomTestStatus::Reducible ? "reducible"
                            : verdict.status == AtomTestStatus::AtomAtDepth
                                ? "atom-at-depth"
                                : "unknown-at-budget"}};
        if (verdict.witness) {
            out["witness"] = {{"left", verdict.witness->first.str()},
                              {"right", verdict.witness->second.str()}};
            json certs = json::object();
            for (const auto& [exponent, cert] : verdict.support_certificates) {
                certs[exponent] = certificate_json(cert);
            }
            out["support_certificates"] = certs;
        }
        if (!verdict.note.empty()) out["note"] = verdict.note;
        emit(out, format);
    });

    auto* sd_support = semidomain->add_subcommand("support", "certify a support in the monoid");
    sd_support->add_option("--p", p)->required();
    sd_support->add_option("--q", q);
    sd_support->add_option("--r", r);
    sd_support->add_option("--expr", expr_text)->required();
    sd_support->add_option("--depth", depth);
    sd_support->callback([&] {
        FpExpr f = parse_fp_expr(expr_text, p);
        PuiseuxMonoidSpec spec = PuiseuxMonoidSpec::mqr(q, r, depth);
        SupportReport report = support_in_monoid(f, spec, depth);
        json entries = json::array();
        for (const SupportEntry& entry : report.entries) {
            entries.push_back({{"exponent", entry.exponent.str()},
                               {"certificate", optional_certificate_json(entry.certificate)}});
        }
        emit({{"expr", f.str()},
              {"depth", report.depth},
              {"all_certified", report.all_certified},
              {"entries", entries}},
             format);
    });

    auto* sd_clear = semidomain->add_subcommand("clear", "clear exponent denominators");
    sd_clear->add_option("--p", p)->required();
    sd_clear->add_option("--expr", expr_text)->required();
    sd_clear->callback([&] {
        FpExpr f = parse_fp_expr(expr_text, p);
        auto [standard, d] = clear_denominators(f);
        emit({{"expr", f.str()}, {"standard", standard.str()}, {"denominator", d.str()}}, format);
    });

    auto* sd_subst = semidomain->add_subcommand("subst", "substitute x -> x^c");
    sd_subst->add_option("--p", p)->required();
    sd_subst->add_option("--expr", expr_text)->required();
    sd_subst->add_option("--power", power_text)->required();
    sd_subst->callback([&] {
        FpExpr f = parse_fp_expr(expr_text, p);
        FpExpr g = substitute_power(f, parse_rational(power_text));
        emit({{"expr", f.str()}, {"power", power_text}, {"result", g.str()}}, format);
    });

    auto* sd_ascent = semidomain->add_subcommand("ascent", "maximal decomposition + content");
    sd_ascent->add_option("--expr", expr_text)->required();
    bool over_z = false;
    sd_ascent->add_flag("--ring-z", over_z, "factor over Z instead of F_p");
    sd_ascent->add_option("--p", p);
    sd_ascent->callback([&] {
        if (over_z) {
            IntPoly f = parse_int_poly(expr_text);
            AscentResultZ result = ascent_factorization(f);
            json atoms = json::array();
            for (const IntPoly& atom : result.atoms) atoms.push_back(atom.str());
            emit({{"expr", f.str()}, {"constant", result.constant.str()}, {"atoms", atoms}}, format);
        } else {
            FpPoly f = parse_fp_poly(expr_text, p);
            AscentResultFp result = ascent_factorization(f);
            json atoms = json::array();
            for (const FpPoly& atom : result.atoms) atoms.push_back(atom.str());
            emit({{"expr", f.str()}, {"unit", result.unit}, {"atoms", atoms}}, format);
        }
    });

    // ---- subring ----
    auto* subring = app.add_subcommand("subring", "S[x] + K[x]x^2 computations");
    subring->require_subcommand(1);
    std::string kappa_text = "s", mode = "almost", candidates_path, z_list, t_list, gamma_text = "t";
    std::string q_text = "1/2";
    std::int64_t atom_value = 2;
    int chain_length = 10, e_value = 2, s_index = 0;
    int budget_xdeg = 4, budget_ydeg = 2, budget_coeff = 3;

    auto* sub_member = subring->add_subcommand("member", "subring membership");
    sub_member->add_option("--ring", ring_name);
    sub_member->add_option("--expr", expr_text)->required();
    sub_member->callback([&] {
        SubringPoly f = parse_subring_poly(expr_text);
        emit({{"ring", ring_name},
              {"expr", f.str()},
              {"member", membership_subring(f, ring_from_name(ring_name))}},
             format);
    });

    auto* sub_atomic = subring->add_subcommand("atomic", "atomicity criterion");
    sub_atomic->add_option("--ring", ring_name);
    sub_atomic->add_option("--expr", expr_text)->required();
    sub_atomic->callback([&] {
        SubringPoly f = parse_subring_poly(expr_text);
        emit({{"ring", ring_name},
              {"expr", f.str()},
              {"atomic", is_atomic_element(f, ring_from_name(ring_name))},
              {"order_coeff", f.order_coeff().str()}},
             format);
    });

    auto* sub_witness = subring->add_subcommand("witness", "almost/quasi-atomic witness");
    sub_witness->add_option("--ring", ring_name);
    sub_witness->add_option("--mode", mode)->check(CLI::IsMember({"almost", "quasi"}));
    sub_witness->add_option("--expr", expr_text)->required();
    sub_witness->callback([&] {
        SubringPoly f = parse_subring_poly(expr_text);
        SubringSpec spec = ring_from_name(ring_name);
        if (mode == "almost") {
            BigInt s = almost_atomic_witness(f, spec);
            SubringPoly product = SubringPoly::constant(RatFunc(Rational(s))) * f;
            emit({{"mode", mode},
                  {"expr", f.str()},
                  {"witness", s.str()},
                  {"product", product.str()},
                  {"product_atomic", is_atomic_element(product, spec)}},
                 format);
        } else {
            SubringPoly g = quasi_atomic_witness(f, spec);
            SubringPoly product = g * f;
            emit({{"mode", mode},
                  {"expr", f.str()},
                  {"witness", g.str()},
                  {"product", product.str()},
                  {"product_atomic", is_atomic_element(product, spec)}},
                 format);
        }
    });

    auto* sub_notalmost = subring->add_subcommand("notalmost", "refutation record for kappa x^2");
    sub_notalmost->add_option("--ring", ring_name)->default_val("ZKs");
    sub_notalmost->add_option("--kappa", kappa_text);
    sub_notalmost->add_option("--expr", expr_text)->required();
    sub_notalmost->callback([&] {
        NonAlmostAtomicRecord record = not_almost_atomic_witness(
            ring_from_name(ring_name), parse_ratfunc(kappa_text), parse_subring_poly(expr_text));
        emit({{"kappa", record.kappa.str()},
              {"factor", record.factor.str()},
              {"product", record.product.str()},
              {"product_order_coeff", record.product_order_coeff.str()},
              {"order_coeff_in_Z", record.order_coeff_in_base}},
             format);
    });

    auto* sub_descent = subring->add_subcommand("descent", "q x^2 = a^k ((q/a^k) x^2) chain");
    sub_descent->add_option("--q", q_text);
    sub_descent->add_option("--a", atom_value);
    sub_descent->add_option("--length", chain_length);
    sub_descent->callback([&] {
        DescentChain chain = infinite_descent_demo(parse_rational(q_text), BigInt(atom_value),
                                                   chain_length);
        json steps = json::array();
        for (const DescentStep& step : chain.steps) {
            steps.push_back({{"k", step.k},
                             {"cofactor", "(" + step.cofactor_coeff.str() + ")*x^2"},
                             {"member", step.member},
                             {"atomic", step.atomic}});
        }
        emit({{"q", chain.q.str()},
              {"a", chain.atom.str()},
              {"strictly_proper", chain.strictly_proper},
              {"steps", steps}},
             format);
    });

    auto* sub_claim1 = subring->add_subcommand("claim1", "integrality constraints on p_i(x)");
    sub_claim1->add_option("--T", t_list, "semicolon-separated T_0;T_1;...")->required();
    sub_claim1->add_option("--e", e_value);
    sub_claim1->add_option("--gamma", gamma_text);
    sub_claim1->callback([&] {
        std::vector<SubringPoly> T;
        std::stringstream stream(t_list);
        std::string item;
        while (std::getline(stream, item, ';')) T.push_back(parse_subring_poly(item));
        Claim1Report report = claim1_constraints(T, e_value, parse_ratfunc(gamma_text));
        json entries = json::array();
        for (const Claim1Entry& entry : report.entries) {
            json violations = json::array();
            for (const auto& [deg, coeff] : entry.violations) {
                violations.push_back({{"degree", deg}, {"coefficient", coeff.str()}});
            }
            entries.push_back({{"i", entry.index},
                               {"p_i", entry.value.str()},
                               {"member", entry.member},
                               {"violations", violations}});
        }
        emit({{"e", report.e},
              {"gamma", report.gamma.str()},
              {"any_violation", report.any_violation},
              {"entries", entries}},
             format);
    });

    auto* sub_claim2 = subring->add_subcommand("claim2", "the recursion Q_k = Z/z_s - x Q_{k-1}");
    sub_claim2->add_option("--zs", z_list, "z_s followed by z_{s+1}, Z_{s+2}, ..., comma separated")
        ->required();
    sub_claim2->add_option("--s", s_index);
    sub_claim2->callback([&] {
        std::vector<BigInt> values;
        std::stringstream stream(z_list);
        std::string item;
        while (std::getline(stream, item, ',')) values.emplace_back(item);
        if (values.size() < 2) {
            throw CLI::ValidationError("--zs", "need z_s plus at least one tail value");
        }
        BigInt z_s = values.front();
        std::vector<BigInt> tail(values.begin() + 1, values.end());
        auto polys = claim2_polynomials(z_s, tail, s_index, s_index + static_cast<int>(tail.size()));
        json rows = json::array();
        for (std::size_t i = 0; i < polys.size(); ++i) {
            rows.push_back({{"k", s_index + 1 + static_cast<int>(i)},
                            {"Q_k", polys[i].str()},
                            {"degree", polys[i].degree().str()}});
        }
        emit({{"z_s", z_s.str()}, {"s", s_index}, {"polynomials", rows}}, format);
    });

    auto* sub_refute = subring->add_subcommand("refute", "refute claimed factorizations");
    sub_refute->add_option("--candidates", candidates_path, "JSON file of {F, factors}")->required();
    sub_refute->add_option("--budget-xdeg", budget_xdeg);
    sub_refute->add_option("--budget-ydeg", budget_ydeg);
    sub_refute->add_option("--budget-coeff", budget_coeff);
    sub_refute->callback([&] {
        std::ifstream in(candidates_path);
        if (!in) {
            throw CLI::ValidationError("--candidates", "cannot open " + candidates_path);
        }
        json corpus = json::parse(in);
        SubringSpec spec{TopField::Qst};
        ProbeBudget budget{budget_xdeg, budget_ydeg, budget_coeff};
        json rows = json::array();
        int valid = 0;
        for (const auto& candidate : corpus) {
            RYPoly multiplier = parse_ry_poly(candidate.at("F").get<std::string>());
            std::vector<RYPoly> factors;
            for (const auto& text : candidate.at("factors")) {
                factors.push_back(parse_ry_poly(text.get<std::string>()));
            }
            RefuteVerdict verdict = refute_quasi_atomic_candidate(multiplier, factors, spec, budget);
            if (verdict.status == RefuteStatus::Valid) ++valid;
            rows.push_back({{"F", candidate.at("F")},
                            {"status", verdict.status == RefuteStatus::Valid      ? "valid"
                                       : verdict.status == RefuteStatus::Invalid ? "invalid"
                                                                                 : "unknown-at-budget"},
                            {"reason", verdict.reason},
                            {"factor_index", verdict.factor_index}});
        }
        emit({{"candidates", rows}, {"valid_count", valid}}, format);
    });

    // ---- papercheck ----
    auto* papercheck = app.add_subcommand("papercheck", "desk-scale verification suites");
    std::string suite = "all";
    PapercheckParams params;
    papercheck->add_option("suite", suite, "one of: prop-mqr, binomials, trinomials, ascent, "
                                           "nonascent, subring, all");
    papercheck->add_option("--seed", params.seed);
    papercheck->add_option("--depth", params.depth);
    papercheck->add_option("--budget-power", params.power_budget);
    papercheck->add_option("--budget-splits", params.split_cap);
    papercheck->add_option("--pmax", params.pmax);
    papercheck->add_option("--n", params.mqr_nmax);
    papercheck->add_option("--q", params.only_q, "restrict prop-mqr to one schedule");
    papercheck->add_option("--r", params.only_r, "restrict prop-mqr to one schedule");
    int papercheck_exit = 0;
    papercheck->callback([&] {
        params.atom_depth = params.depth;
        std::vector<CheckReport> reports = run_papercheck(suite, params);
        if (format == "json") {
            std::cout << reports_to_json(reports).dump(2) << "\n";
        } else {
            std::cout << reports_to_text(reports);
        }
        papercheck_exit = exit_code_for(reports);
    });

    // allow the global --format after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return papercheck_exit;
}
