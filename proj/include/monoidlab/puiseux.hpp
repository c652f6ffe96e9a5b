#pragma once

#include "monoidlab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monoidlab {

/// Schedule (q, r, ell) for the monoid generated by
///   a_n = (q^n r^(ell_n) - 1) / (2 q^(2n) r^(ell_n)),
///   b_n = (q^n r^(ell_n) + 1) / (2 q^(2n) r^(ell_n)).
/// The exponents ell_1 < ell_2 < ... satisfy r^(ell_n - ell_{n-1}) > 2 q^(n+1)
/// with ell_0 = 0. An empty ell means the minimal admissible sequence.
struct GeneratorSchedule {
    std::int64_t q = 2;
    std::int64_t r = 3;
    std::vector<long long> ell;  // optional override, validated on use
};

/// Minimal admissible ell_n for the schedule, anchored at ell_0 = 0.
long long ell_sequence(std::int64_t q, std::int64_t r, int n);

/// Resolves ell_n for a schedule (override or minimal), validating the
/// growth condition.
long long schedule_ell(const GeneratorSchedule& schedule, int n);

/// Exact closed-form generator pair (a_n, b_n).
std::pair<Rational, Rational> generators(const GeneratorSchedule& schedule, int n);

struct Generator {
    std::string label;
    Rational value;
};

/// Finitely presented truncation of a Puiseux monoid: either an explicit
/// generator list or the depth-D slice {a_1, b_1, ..., a_D, b_D} of a
/// schedule.
class PuiseuxMonoidSpec {
public:
    static PuiseuxMonoidSpec explicit_monoid(std::vector<Rational> generators);
    static PuiseuxMonoidSpec mqr(GeneratorSchedule schedule, int depth);
    static PuiseuxMonoidSpec mqr(std::int64_t q, std::int64_t r, int depth);

    bool is_mqr() const { return schedule_.has_value(); }
    const GeneratorSchedule& schedule() const;
    int depth() const { return depth_; }

    /// Generators available at the given depth. Explicit monoids expose their
    /// full list at every depth.
    std::vector<Generator> generators_at(int depth) const;

private:
    PuiseuxMonoidSpec() = default;

    std::vector<Rational> explicit_generators_;
    std::optional<GeneratorSchedule> schedule_;
    int depth_ = 0;
};

/// Nonnegative-integer combination of generators witnessing membership.
/// Keys are generator labels; zero coefficients are omitted.
struct MembershipCertificate {
    std::map<std::string, unsigned long long> coeffs;

    unsigned long long total() const;
    friend bool operator==(const MembershipCertificate&, const MembershipCertificate&) = default;
};

/// Recomputes the weighted generator sum of a certificate.
Rational certificate_sum(const MembershipCertificate& cert, const std::vector<Generator>& gens);

struct SearchLimits {
    /// Abort the exact search after this many visited nodes. The search is
    /// exhaustive whenever it completes; exceeding the budget throws.
    std::uint64_t max_nodes = 50'000'000;
};

/// Exact bounded membership oracle: a certificate over the depth-D
/// generators if one exists, none otherwise. "None" certifies only the
/// absence of a representation at this depth.
std::optional<MembershipCertificate> membership(const Rational& target, const PuiseuxMonoidSpec& spec,
                                                int depth, const SearchLimits& limits = {});

/// Additive divisibility: a certificate for c - b at the given depth.
/// c - b < 0 yields none immediately.
std::optional<MembershipCertificate> divides(const Rational& b, const Rational& c,
                                             const PuiseuxMonoidSpec& spec, int depth,
                                             const SearchLimits& limits = {});

struct AtomVerdict {
    bool is_atom_at_depth = false;
    int depth = 0;
    /// Present when reducible: a certificate over the other generators.
    std::optional<MembershipCertificate> refutation;
};

/// Bounded atom test for a depth-D generator: reducible iff it is a
/// nonnegative combination of the remaining depth-D generators.
AtomVerdict is_atom_bounded(const std::string& label, const PuiseuxMonoidSpec& spec, int depth,
                            const SearchLimits& limits = {});
AtomVerdict is_atom_bounded(const Rational& generator_value, const PuiseuxMonoidSpec& spec, int depth,
                            const SearchLimits& limits = {});

struct ChainLink {
    int index = 0;
    /// Chain value at this index and the next one.
    Rational value;
    Rational next_value;
    /// c_n - c_{n+1} in M at this depth (the inclusion of principal ideals).
    bool ascends = false;
    std::optional<MembershipCertificate> ascent_certificate;
    /// Inclusion strict: c_{n+1} - c_n not in M at this depth.
    bool proper = false;
};

struct ChainReport {
    std::vector<ChainLink> links;
    int depth = 0;
    /// Every probed inclusion holds and is strict: the chain does not
    /// stabilize within the probed range.
    bool all_proper = false;
};

/// Probes the principal-ideal chain (c_n + M) for the given values.
ChainReport accp_chain_probe(const PuiseuxMonoidSpec& spec, const std::vector<Rational>& chain,
                             int depth, const SearchLimits& limits = {});

/// Probes the chain (1/q^n + M) for n = 1..n_max on an mqr spec.
ChainReport accp_chain_probe(const PuiseuxMonoidSpec& spec, int n_max, int depth,
                             const SearchLimits& limits = {});

/// Every multiset of depth-D atoms summing to the target; exhaustive over
/// the atoms of the truncation.
std::vector<MembershipCertificate> factorizations_bounded(const Rational& target,
                                                          const PuiseuxMonoidSpec& spec, int depth,
                                                          const SearchLimits& limits = {});

/// All certificates over the full depth-D generator list (not only atoms).
std::vector<MembershipCertificate> all_certificates(const Rational& target,
                                                     const PuiseuxMonoidSpec& spec, int depth,
                                                     const SearchLimits& limits = {});

}  // namespace monoidlab
