#include "monoidlab/puiseux.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace monoidlab {

namespace {

void validate_schedule(const GeneratorSchedule& s) {
    if (!is_prime(BigInt(s.q))) {
        throw std::domain_error("GeneratorSchedule: q must be prime");
    }
    if (s.r < 2) {
        throw std::domain_error("GeneratorSchedule: r must be at least 2");
    }
    if (boost::multiprecision::gcd(BigInt(s.q), BigInt(s.r)) != 1) {
        throw std::domain_error("GeneratorSchedule: q and r must be coprime");
    }
}

}  // namespace

long long ell_sequence(std::int64_t q, std::int64_t r, int n) {
    validate_schedule({q, r, {}});
    if (n < 1) {
        throw std::domain_error("ell_sequence: index must be positive");
    }
    long long ell = 0;
    for (int k = 1; k <= n; ++k) {
        BigInt bound = 2 * bigint_pow(BigInt(q), static_cast<unsigned long long>(k) + 1);
        long long delta = 1;
        BigInt power(r);
        while (power <= bound) {
            power *= r;
            ++delta;
        }
        ell += delta;
    }
    return ell;
}

long long schedule_ell(const GeneratorSchedule& schedule, int n) {
    validate_schedule(schedule);
    if (n < 1) {
        throw std::domain_error("schedule_ell: index must be positive");
    }
    if (schedule.ell.empty()) {
        return ell_sequence(schedule.q, schedule.r, n);
    }
    if (static_cast<std::size_t>(n) > schedule.ell.size()) {
        throw std::domain_error("schedule_ell: override shorter than requested index");
    }
    long long prev = 0;
    for (int k = 1; k <= n; ++k) {
        long long cur = schedule.ell[static_cast<std::size_t>(k) - 1];
        if (cur <= prev) {
            throw std::domain_error("schedule_ell: override not strictly increasing");
        }
        BigInt growth = bigint_pow(BigInt(schedule.r), static_cast<unsigned long long>(cur - prev));
        BigInt bound = 2 * bigint_pow(BigInt(schedule.q), static_cast<unsigned long long>(k) + 1);
        if (growth <= bound) {
            throw std::domain_error("schedule_ell: override violates the growth condition");
        }
        prev = cur;
    }
    return schedule.ell[static_cast<std::size_t>(n) - 1];
}

std::pair<Rational, Rational> generators(const GeneratorSchedule& schedule, int n) {
    long long ell = schedule_ell(schedule, n);
    BigInt qn = bigint_pow(BigInt(schedule.q), static_cast<unsigned long long>(n));
    BigInt rl = bigint_pow(BigInt(schedule.r), static_cast<unsigned long long>(ell));
    BigInt den = 2 * qn * qn * rl;
    BigInt core = qn * rl;
    return {make_rational(core - 1, den), make_rational(core + 1, den)};
}

PuiseuxMonoidSpec PuiseuxMonoidSpec::explicit_monoid(std::vector<Rational> generators) {
    for (const Rational& g : generators) {
        if (!g.is_positive()) {
            throw std::domain_error("PuiseuxMonoidSpec: generators must be positive");
        }
    }
    PuiseuxMonoidSpec spec;
    spec.explicit_generators_ = std::move(generators);
    spec.depth_ = static_cast<int>(spec.explicit_generators_.size());
    return spec;
}

PuiseuxMonoidSpec PuiseuxMonoidSpec::mqr(GeneratorSchedule schedule, int depth) {
    validate_schedule(schedule);
    if (depth < 1) {
        throw std::domain_error("PuiseuxMonoidSpec: depth must be positive");
    }
    PuiseuxMonoidSpec spec;
    spec.schedule_ = std::move(schedule);
    spec.depth_ = depth;
    return spec;
}

PuiseuxMonoidSpec PuiseuxMonoidSpec::mqr(std::int64_t q, std::int64_t r, int depth) {
    return mqr(GeneratorSchedule{q, r, {}}, depth);
}

const GeneratorSchedule& PuiseuxMonoidSpec::schedule() const {
    if (!schedule_) {
        throw std::domain_error("PuiseuxMonoidSpec: not an mqr spec");
    }
    return *schedule_;
}

std::vector<Generator> PuiseuxMonoidSpec::generators_at(int depth) const {
    std::vector<Generator> out;
    if (!schedule_) {
        for (std::size_t i = 0; i < explicit_generators_.size(); ++i) {
            out.push_back({"g" + std::to_string(i + 1), explicit_generators_[i]});
        }
        return out;
    }
    if (depth < 1) {
        throw std::domain_error("generators_at: depth must be positive");
    }
    for (int n = 1; n <= depth; ++n) {
        auto [a, b] = generators(*schedule_, n);
        out.push_back({"a" + std::to_string(n), a});
        out.push_back({"b" + std::to_string(n), b});
    }
    return out;
}

unsigned long long MembershipCertificate::total() const {
    unsigned long long t = 0;
    for (const auto& [label, c] : coeffs) t += c;
    return t;
}

Rational certificate_sum(const MembershipCertificate& cert, const std::vector<Generator>& gens) {
    Rational sum(0);
    for (const auto& [label, count] : cert.coeffs) {
        auto it = std::find_if(gens.begin(), gens.end(),
                               [&](const Generator& g) { return g.label == label; });
        if (it == gens.end()) {
            throw std::domain_error("certificate_sum: unknown generator label " + label);
        }
        sum += it->value * Rational(BigInt(count));
    }
    return sum;
}

namespace {

BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    BigInt x1, y1;
    BigInt g = extended_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/// Inverse of a modulo m; gcd(a, m) must be 1 and m >= 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt x, y;
    extended_gcd(((a % m) + m) % m, m, x, y);
    BigInt inv = x % m;
    if (inv < 0) inv += m;
    return inv;
}

/// Exact search for nonnegative combinations over a fixed generator list,
/// on values scaled to a common denominator. Generators are visited in
/// decreasing denominator order; at each one, only the coefficients in the
/// arithmetic progression forced by the suffix-denominator congruence are
/// enumerated, which collapses the deep levels of a schedule to a handful
/// of candidates.
class CombinationSearch {
public:
    CombinationSearch(const Rational& target, std::vector<Generator> gens, const SearchLimits& limits)
        : limits_(limits) {
        order_ = std::move(gens);
        std::sort(order_.begin(), order_.end(), [](const Generator& x, const Generator& y) {
            if (x.value.den() != y.value.den()) return x.value.den() > y.value.den();
            return x.value > y.value;
        });
        common_den_ = target.den();
        for (const Generator& g : order_) {
            common_den_ = boost::multiprecision::lcm(common_den_, g.value.den());
        }
        scaled_target_ = target.num() * (common_den_ / target.den());
        for (const Generator& g : order_) {
            scaled_.push_back(g.value.num() * (common_den_ / g.value.den()));
        }
        // modulus_[i]: every value reachable by the suffix from i is a
        // multiple of it, so the remainder handed to index i must be too.
        suffix_lcm_.assign(order_.size() + 1, BigInt(1));
        for (std::size_t i = order_.size(); i-- > 0;) {
            suffix_lcm_[i] = boost::multiprecision::lcm(suffix_lcm_[i + 1], order_[i].value.den());
        }
        modulus_.assign(order_.size() + 1, BigInt(1));
        for (std::size_t i = 0; i <= order_.size(); ++i) {
            modulus_[i] = common_den_ / boost::multiprecision::gcd(common_den_, suffix_lcm_[i]);
        }
    }

    /// First certificate found, or none after exhausting the space.
    std::optional<MembershipCertificate> find_first() {
        counts_.assign(order_.size(), 0);
        solutions_.clear();
        stop_after_first_ = true;
        failed_.clear();
        nodes_ = 0;
        if (scaled_target_ % modulus_[0] == 0) {
            search(0, scaled_target_);
        }
        if (solutions_.empty()) return std::nullopt;
        return solutions_.front();
    }

    std::vector<MembershipCertificate> find_all() {
        counts_.assign(order_.size(), 0);
        solutions_.clear();
        stop_after_first_ = false;
        failed_.clear();
        nodes_ = 0;
        if (scaled_target_ % modulus_[0] == 0) {
            search(0, scaled_target_);
        }
        return solutions_;
    }

private:
    /// Precondition: remaining is a multiple of modulus_[i].
    bool search(std::size_t i, const BigInt& remaining) {
        if (++nodes_ > limits_.max_nodes) {
            throw std::runtime_error("membership search: node budget exceeded");
        }
        if (remaining == 0) {
            record_solution();
            return stop_after_first_;
        }
        if (i == order_.size()) return false;
        if (stop_after_first_) {
            auto key = std::make_pair(i, remaining);
            if (failed_.count(key) != 0) return false;
        }
        // Solve c * G_i = remaining (mod modulus_[i+1]) for the admissible
        // coefficient progression.
        const BigInt& mod = modulus_[i + 1];
        BigInt cap = remaining / scaled_[i];
        bool found = false;
        BigInt step = 1;
        BigInt first_candidate = cap;
        if (mod > 1) {
            BigInt g = boost::multiprecision::gcd(scaled_[i] % mod, mod);
            if ((remaining % mod) % g != 0) {
                if (stop_after_first_) failed_.emplace(i, remaining);
                return false;
            }
            BigInt reduced_mod = mod / g;
            if (reduced_mod > 1) {
                BigInt rhs = (remaining % mod) / g;
                BigInt base = (rhs * mod_inverse((scaled_[i] % mod) / g, reduced_mod)) % reduced_mod;
                step = reduced_mod;
                // largest candidate <= cap congruent to base
                if (cap < base) {
                    if (stop_after_first_) failed_.emplace(i, remaining);
                    return false;
                }
                first_candidate = cap - ((cap - base) % step);
            }
        }
        for (BigInt c = first_candidate; c >= 0; c -= step) {
            counts_[i] = static_cast<unsigned long long>(c);
            if (search(i + 1, remaining - c * scaled_[i])) {
                found = true;
                if (stop_after_first_) break;
            }
        }
        counts_[i] = 0;
        if (!found && stop_after_first_) {
            failed_.emplace(i, remaining);
        }
        return found;
    }

    void record_solution() {
        MembershipCertificate cert;
        for (std::size_t j = 0; j < order_.size(); ++j) {
            if (counts_[j] != 0) cert.coeffs[order_[j].label] = counts_[j];
        }
        solutions_.push_back(std::move(cert));
    }

    SearchLimits limits_;
    std::vector<Generator> order_;
    std::vector<BigInt> scaled_;
    std::vector<BigInt> suffix_lcm_;
    std::vector<BigInt> modulus_;
    BigInt common_den_;
    BigInt scaled_target_;
    std::vector<unsigned long long> counts_;
    std::vector<MembershipCertificate> solutions_;
    std::set<std::pair<std::size_t, BigInt>> failed_;
    bool stop_after_first_ = true;
    std::uint64_t nodes_ = 0;
};

std::optional<MembershipCertificate> search_over(const Rational& target,
                                                 std::vector<Generator> gens,
                                                 const SearchLimits& limits) {
    if (target.is_negative()) return std::nullopt;
    if (target.is_zero()) return MembershipCertificate{};
    CombinationSearch search(target, std::move(gens), limits);
    return search.find_first();
}

}  // namespace

std::optional<MembershipCertificate> membership(const Rational& target, const PuiseuxMonoidSpec& spec,
                                                int depth, const SearchLimits& limits) {
    if (target.is_negative()) {
        throw std::domain_error("membership: target must be nonnegative");
    }
    return search_over(target, spec.generators_at(depth), limits);
}

std::optional<MembershipCertificate> divides(const Rational& b, const Rational& c,
                                             const PuiseuxMonoidSpec& spec, int depth,
                                             const SearchLimits& limits) {
    Rational difference = c - b;
    if (difference.is_negative()) return std::nullopt;
    return search_over(difference, spec.generators_at(depth), limits);
}

AtomVerdict is_atom_bounded(const std::string& label, const PuiseuxMonoidSpec& spec, int depth,
                            const SearchLimits& limits) {
    std::vector<Generator> gens = spec.generators_at(depth);
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const Generator& g) { return g.label == label; });
    if (it == gens.end()) {
        throw std::domain_error("is_atom_bounded: " + label + " is not a depth-" +
                                std::to_string(depth) + " generator");
    }
    Rational value = it->value;
    gens.erase(it);
    AtomVerdict verdict;
    verdict.depth = depth;
    verdict.refutation = search_over(value, std::move(gens), limits);
    verdict.is_atom_at_depth = !verdict.refutation.has_value();
    return verdict;
}

AtomVerdict is_atom_bounded(const Rational& generator_value, const PuiseuxMonoidSpec& spec, int depth,
                            const SearchLimits& limits) {
    std::vector<Generator> gens = spec.generators_at(depth);
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const Generator& g) { return g.value == generator_value; });
    if (it == gens.end()) {
        throw std::domain_error("is_atom_bounded: value " + generator_value.str() +
                                " is not a depth-" + std::to_string(depth) + " generator");
    }
    return is_atom_bounded(it->label, spec, depth, limits);
}

ChainReport accp_chain_probe(const PuiseuxMonoidSpec& spec, const std::vector<Rational>& chain,
                             int depth, const SearchLimits& limits) {
    if (chain.size() < 2) {
        throw std::domain_error("accp_chain_probe: chain needs at least two values");
    }
    ChainReport report;
    report.depth = depth;
    report.all_proper = true;
    for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
        ChainLink link;
        link.index = static_cast<int>(n + 1);
        link.value = chain[n];
        link.next_value = chain[n + 1];
        link.ascent_certificate = divides(chain[n + 1], chain[n], spec, depth, limits);
        link.ascends = link.ascent_certificate.has_value();
        link.proper = link.ascends && !divides(chain[n], chain[n + 1], spec, depth, limits).has_value();
        report.all_proper = report.all_proper && link.proper;
        report.links.push_back(std::move(link));
    }
    return report;
}

ChainReport accp_chain_probe(const PuiseuxMonoidSpec& spec, int n_max, int depth,
                             const SearchLimits& limits) {
    const GeneratorSchedule& schedule = spec.schedule();
    std::vector<Rational> chain;
    for (int n = 1; n <= n_max + 1; ++n) {
        chain.push_back(rational_pow(Rational(1, schedule.q), n));
    }
    return accp_chain_probe(spec, chain, depth, limits);
}

std::vector<MembershipCertificate> all_certificates(const Rational& target,
                                                    const PuiseuxMonoidSpec& spec, int depth,
                                                    const SearchLimits& limits) {
    if (target.is_negative()) {
        throw std::domain_error("all_certificates: target must be nonnegative");
    }
    if (target.is_zero()) return {MembershipCertificate{}};
    CombinationSearch search(target, spec.generators_at(depth), limits);
    return search.find_all();
}

std::vector<MembershipCertificate> factorizations_bounded(const Rational& target,
                                                          const PuiseuxMonoidSpec& spec, int depth,
                                                          const SearchLimits& limits) {
    if (target.is_negative()) {
        throw std::domain_error("factorizations_bounded: target must be nonnegative");
    }
    if (target.is_zero()) return {MembershipCertificate{}};
    std::vector<Generator> atoms;
    for (const Generator& g : spec.generators_at(depth)) {
        if (is_atom_bounded(g.label, spec, depth, limits).is_atom_at_depth) {
            atoms.push_back(g);
        }
    }
    CombinationSearch search(target, std::move(atoms), limits);
    return search.find_all();
}

}  // namespace monoidlab
