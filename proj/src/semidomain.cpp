#include "monoidlab/semidomain.hpp"

#include <algorithm>

namespace monoidlab {

namespace {

std::int64_t modulus_of(const FpExpr& f) {
    if (f.is_zero()) {
        throw std::domain_error("expression is zero; modulus unknown");
    }
    return f.terms().begin()->second.p;
}

BigInt exponent_lcm(const FpExpr& f) {
    BigInt lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        lcm = boost::multiprecision::lcm(lcm, e.den());
    }
    return lcm;
}

}  // namespace

std::pair<FpPoly, BigInt> clear_denominators(const FpExpr& f) {
    if (f.is_zero()) {
        return {FpPoly(2), BigInt(1)};
    }
    std::int64_t p = modulus_of(f);
    BigInt d = exponent_lcm(f);
    std::vector<std::int64_t> coeffs;
    for (const auto& [e, c] : f.terms()) {
        BigInt idx = e.num() * (d / e.den());
        auto i = static_cast<std::size_t>(idx);
        if (coeffs.size() <= i) coeffs.resize(i + 1, 0);
        coeffs[i] = c.value;
    }
    return {FpPoly(p, std::move(coeffs)), d};
}

FpExpr from_standard(const FpPoly& f, const Rational& scale) {
    if (!scale.is_positive()) {
        throw std::domain_error("from_standard: scale must be positive");
    }
    FpExpr out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeff(i) == 0) continue;
        out.add_term(Rational(BigInt(i)) * scale, FpElem{f.coeff(i), f.modulus()});
    }
    return out;
}

std::optional<FpExpr> divide_exact(const FpExpr& f, const FpExpr& g) {
    if (g.is_zero()) {
        throw std::domain_error("divide_exact: division by zero");
    }
    if (f.is_zero()) return FpExpr();
    BigInt lattice = boost::multiprecision::lcm(exponent_lcm(f), exponent_lcm(g));
    Rational scale(lattice);
    auto [fs, df] = clear_denominators(f.substituted_power(scale));
    auto [gs, dg] = clear_denominators(g.substituted_power(scale));
    auto [q, r] = fp_poly_divrem(fs, gs);
    if (!r.is_zero()) return std::nullopt;
    return from_standard(q, Rational(1) / scale);
}

SupportReport support_in_monoid(const std::vector<Rational>& support, const PuiseuxMonoidSpec& spec,
                                int depth, const SearchLimits& limits) {
    SupportReport report;
    report.depth = depth;
    report.all_certified = true;
    for (const Rational& e : support) {
        SupportEntry entry;
        entry.exponent = e;
        entry.certificate = membership(e, spec, depth, limits);
        report.all_certified = report.all_certified && entry.certificate.has_value();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

SupportReport support_in_monoid(const FpExpr& f, const PuiseuxMonoidSpec& spec, int depth,
                                const SearchLimits& limits) {
    return support_in_monoid(f.support(), spec, depth, limits);
}

namespace {

/// Lattice refinement step: the denominators reachable by the search are
/// D * step^j. For a schedule this is q*r, mirroring the substitution
/// x -> x^((q r)^j) before clearing.
BigInt refinement_step(const PuiseuxMonoidSpec& spec) {
    if (spec.is_mqr()) {
        return BigInt(spec.schedule().q) * spec.schedule().r;
    }
    BigInt step = 1;
    for (const Generator& g : spec.generators_at(spec.depth())) {
        step = boost::multiprecision::lcm(step, g.value.den());
    }
    return step;
}

class CertificateCache {
public:
    CertificateCache(const PuiseuxMonoidSpec& spec, int depth, const SearchLimits& limits)
        : spec_(spec), depth_(depth), limits_(limits) {}

    const std::optional<MembershipCertificate>& lookup(const Rational& e) {
        auto it = cache_.find(e);
        if (it == cache_.end()) {
            it = cache_.emplace(e, membership(e, spec_, depth_, limits_)).first;
        }
        return it->second;
    }

    bool all_member(const FpExpr& f, std::map<std::string, MembershipCertificate>& out) {
        for (const auto& [e, c] : f.terms()) {
            (void)c;
            const auto& cert = lookup(e);
            if (!cert.has_value()) return false;
        }
        for (const auto& [e, c] : f.terms()) {
            (void)c;
            out.emplace(e.str(), *lookup(e));
        }
        return true;
    }

private:
    const PuiseuxMonoidSpec& spec_;
    int depth_;
    SearchLimits limits_;
    std::map<Rational, std::optional<MembershipCertificate>> cache_;
};

ExprAtomVerdict monomial_atom_test(const FpExpr& f, const PuiseuxMonoidSpec& spec, int depth,
                                   const AtomTestBudget& budget) {
    ExprAtomVerdict verdict;
    verdict.depth = depth;
    verdict.budget = budget;
    const Rational& u = f.order();
    const FpElem coeff = f.order_coeff();
    auto certs = all_certificates(u, spec, depth, budget.membership);
    if (certs.empty()) {
        verdict.status = AtomTestStatus::Unknown;
        verdict.note = "exponent not certified in the monoid at this depth";
        return verdict;
    }
    std::vector<Generator> gens = spec.generators_at(depth);
    for (const auto& cert : certs) {
        if (cert.total() < 2) continue;
        // Split off one generator occurrence: f = (x^v) * (coeff * x^(u-v)).
        auto first = cert.coeffs.begin();
        Rational v;
        for (const Generator& g : gens) {
            if (g.label == first->first) v = g.value;
        }
        FpExpr left = FpExpr::monomial(v, FpElem{1, coeff.p});
        FpExpr right = FpExpr::monomial(u - v, coeff);
        verdict.status = AtomTestStatus::Reducible;
        verdict.witness = {left, right};
        MembershipCertificate left_cert;
        left_cert.coeffs[first->first] = 1;
        MembershipCertificate right_cert = cert;
        if (--right_cert.coeffs[first->first] == 0) right_cert.coeffs.erase(first->first);
        verdict.support_certificates.emplace(v.str(), left_cert);
        verdict.support_certificates.emplace((u - v).str(), right_cert);
        return verdict;
    }
    verdict.status = AtomTestStatus::AtomAtDepth;
    return verdict;
}

}  // namespace

ExprAtomVerdict atom_test_bounded(const FpExpr& f, const PuiseuxMonoidSpec& spec, int depth,
                                  const AtomTestBudget& budget) {
    if (f.is_zero()) {
        throw std::domain_error("atom_test_bounded: zero expression");
    }
    ExprAtomVerdict verdict;
    verdict.depth = depth;
    verdict.budget = budget;
    if (f.is_constant()) {
        verdict.status = AtomTestStatus::Unit;
        return verdict;
    }
    if (f.is_monomial()) {
        return monomial_atom_test(f, spec, depth, budget);
    }

    std::int64_t p = modulus_of(f);
    BigInt base_den = exponent_lcm(f);
    BigInt step = refinement_step(spec);
    CertificateCache cache(spec, depth, budget.membership);
    bool truncated = false;

    for (int j = 0; j <= budget.power_budget; ++j) {
        BigInt lattice = base_den * bigint_pow(step, static_cast<unsigned long long>(j));
        if (BigInt(f.degree().num()) * lattice > 200'000 * f.degree().den()) {
            truncated = true;
            verdict.note = "exponent lattice outgrew the dense-polynomial bound";
            break;
        }
        auto [standard, d] = clear_denominators(f.substituted_power(Rational(lattice)));
        (void)d;
        FpFactorization fac = factorize(standard);
        std::size_t k = fac.factors.size();
        int total_multiplicity = 0;
        for (const auto& [g, m] : fac.factors) {
            (void)g;
            total_multiplicity += m;
        }
        if (total_multiplicity < 2) continue;

        // Enumerate groupings of the factor multiset into two nonempty blocks.
        std::vector<int> pick(k, 0);
        std::uint64_t examined = 0;
        while (true) {
            // advance odometer
            std::size_t idx = 0;
            while (idx < k) {
                if (pick[idx] < fac.factors[idx].second) {
                    ++pick[idx];
                    break;
                }
                pick[idx] = 0;
                ++idx;
            }
            if (idx == k) break;
            int picked = 0;
            for (std::size_t i = 0; i < k; ++i) picked += pick[i];
            if (picked == 0 || picked == total_multiplicity) continue;
            if (++examined > budget.split_cap) {
                truncated = true;
                break;
            }
            FpPoly left = FpPoly::constant(p, fac.unit);
            FpPoly right = FpPoly::constant(p, 1);
            for (std::size_t i = 0; i < k; ++i) {
                if (pick[i] > 0) left = left * fp_poly_pow(fac.factors[i].first, BigInt(pick[i]));
                int rest = fac.factors[i].second - pick[i];
                if (rest > 0) right = right * fp_poly_pow(fac.factors[i].first, BigInt(rest));
            }
            FpExpr g = from_standard(left, Rational(1) / Rational(lattice));
            FpExpr h = from_standard(right, Rational(1) / Rational(lattice));
            std::map<std::string, MembershipCertificate> certs;
            if (cache.all_member(g, certs) && cache.all_member(h, certs)) {
                verdict.status = AtomTestStatus::Reducible;
                verdict.witness = {g, h};
                verdict.support_certificates = std::move(certs);
                return verdict;
            }
        }
    }

    if (truncated) {
        verdict.status = AtomTestStatus::Unknown;
        if (verdict.note.empty()) verdict.note = "split enumeration truncated by the split cap";
    } else {
        verdict.status = AtomTestStatus::AtomAtDepth;
    }
    return verdict;
}

bool indecomposable(const FpPoly& f, const OracleConfig& config) {
    if (f.degree() < 1) {
        throw std::domain_error("indecomposable: constant polynomial");
    }
    FpFactorization fac = factorize(f, config);
    int total = 0;
    for (const auto& [g, m] : fac.factors) {
        (void)g;
        total += m;
    }
    return total == 1;
}

bool indecomposable_in_monoid(const FpExpr& f, const PuiseuxMonoidSpec& spec, int depth,
                              const AtomTestBudget& budget) {
    if (f.is_zero() || f.is_constant()) {
        throw std::domain_error("indecomposable_in_monoid: constant expression");
    }
    ExprAtomVerdict verdict = atom_test_bounded(f, spec, depth, budget);
    if (verdict.status == AtomTestStatus::Unknown) {
        throw std::runtime_error("indecomposable_in_monoid: undecided within budget (" +
                                 verdict.note + ")");
    }
    return verdict.status != AtomTestStatus::Reducible;
}

}  // namespace monoidlab
