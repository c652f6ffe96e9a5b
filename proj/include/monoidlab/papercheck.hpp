#pragma once

#include "monoidlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace monoidlab {

struct PapercheckParams {
    std::uint64_t seed = 20250809;
    /// Membership search depth for monoid checks.
    int depth = 6;
    /// Exponent-lattice refinement budget for semidomain atom tests.
    int power_budget = 2;
    std::uint64_t split_cap = 1 << 16;
    /// Largest prime in the binomial agreement sweep.
    int pmax = 31;
    /// Index range for the generator-schedule checks.
    int mqr_nmax = 8;
    /// Index and depth ranges for the bounded atom verdicts.
    int atom_nmax = 3;
    int atom_depth = 6;
    /// When nonzero, restricts the prop-mqr suite to one (q, r) pair.
    std::int64_t only_q = 0;
    std::int64_t only_r = 0;
    /// Sample counts for randomized suites.
    int ascent_fp_samples = 500;
    int ascent_z_samples = 200;
    int claim_support_samples = 50;
    int subring_corpus_samples = 200;
    int not_almost_samples = 50;
    int descent_length = 10;
    /// Subring probe budgets.
    int probe_x_degree = 4;
    int probe_y_degree = 2;
    int probe_coeff_complexity = 3;
};

/// Suites: prop-mqr, binomials, trinomials, ascent, nonascent, subring, all.
const std::vector<std::string>& papercheck_suites();

/// Runs the mapped checks and returns reports sorted by check id.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckReport> run_papercheck(const std::string& suite, const PapercheckParams& params);

/// The shipped 20-candidate corpus for the refuter, as a JSON list of
/// {"F": ..., "factors": [...]} objects in the expression grammar.
const char* refute_corpus_json();

}  // namespace monoidlab
