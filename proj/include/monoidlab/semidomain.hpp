#pragma once

#include "monoidlab/fp.hpp"
#include "monoidlab/polyexpr.hpp"
#include "monoidlab/puiseux.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monoidlab {

/// Clears exponent denominators: D is their lcm and the returned standard
/// polynomial is f with x replaced by x^(1/D) undone, i.e. f(x^D) read with
/// integer exponents. Round-trips with from_standard(poly, 1/D).
std::pair<FpPoly, BigInt> clear_denominators(const FpExpr& f);

/// Standard polynomial viewed in F_p[M] with exponents scaled by `scale`.
FpExpr from_standard(const FpPoly& f, const Rational& scale);

/// Exact quotient f / g in F_p[M]; none when g does not divide f over the
/// common exponent lattice.
std::optional<FpExpr> divide_exact(const FpExpr& f, const FpExpr& g);

struct SupportEntry {
    Rational exponent;
    std::optional<MembershipCertificate> certificate;
};

struct SupportReport {
    std::vector<SupportEntry> entries;
    int depth = 0;
    bool all_certified = false;
};

/// Per-exponent membership certification of a support at the given depth.
SupportReport support_in_monoid(const std::vector<Rational>& support, const PuiseuxMonoidSpec& spec,
                                int depth, const SearchLimits& limits = {});
SupportReport support_in_monoid(const FpExpr& f, const PuiseuxMonoidSpec& spec, int depth,
                                const SearchLimits& limits = {});

enum class AtomTestStatus { Unit, AtomAtDepth, Reducible, Unknown };

struct AtomTestBudget {
    /// Highest j in the exponent-lattice refinement N = D * (step)^j, where
    /// step is the product of the schedule parameters (or the generator
    /// denominator lcm for explicit monoids).
    int power_budget = 2;
    /// Cap on factor-grouping candidates examined per refinement level.
    std::uint64_t split_cap = 1 << 16;
    SearchLimits membership;
};

struct ExprAtomVerdict {
    AtomTestStatus status = AtomTestStatus::Unknown;
    int depth = 0;
    AtomTestBudget budget;
    /// For Reducible: a pair of non-unit expressions multiplying to f.
    std::optional<std::pair<FpExpr, FpExpr>> witness;
    /// Certificates for every exponent in the witness supports, keyed by
    /// exponent text.
    std::map<std::string, MembershipCertificate> support_certificates;
    std::string note;
};

/// Bounded atom test in F_p[M]: searches for a factorization f = g*h with
/// both supports certified in the monoid, over exponent lattices refined up
/// to the power budget. Verdicts carry the budget; AtomAtDepth certifies
/// only the searched region.
ExprAtomVerdict atom_test_bounded(const FpExpr& f, const PuiseuxMonoidSpec& spec, int depth,
                                  const AtomTestBudget& budget = {});

/// A standard polynomial is indecomposable iff it is not a product of two
/// nonconstant polynomials; over a field this counts irreducible factors.
bool indecomposable(const FpPoly& f, const OracleConfig& config = {});

/// Bounded indecomposability in F_p[M]; throws when the split enumeration
/// was truncated before a decision.
bool indecomposable_in_monoid(const FpExpr& f, const PuiseuxMonoidSpec& spec, int depth,
                              const AtomTestBudget& budget = {});

}  // namespace monoidlab
