#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilcalc {

/// One verification line: a measured value against its pinned threshold.
struct CriterionResult {
    int id = 0;
    std::string name;
    std::string group;
    double value = 0.0;
    double threshold = 0.0;
    /// "<=", ">=", or "==0" (exact symbolic identities report a violation
    /// count that must be zero).
    std::string comparison = "<=";
    bool pass = false;
    double seconds = 0.0;
    std::string details;
};

struct SuiteConfig {
    std::uint64_t seed = 20120701;
    /// Scales every grid axis count (1.0 = defaults).
    double grid_scale = 1.0;
    /// Directory for CSV/JSON artifacts; empty disables file output.
    std::string output_dir;
    /// Skip the grid-based criteria (symbolic-only run).
    bool symbolic_only = false;
};

/// Individual criteria (numbering follows the acceptance list).
CriterionResult criterion_bch_axioms(const SuiteConfig& config);            // 1
CriterionResult criterion_duality(const SuiteConfig& config);               // 2
CriterionResult criterion_qalpha_identities(const SuiteConfig& config);     // 3
std::vector<CriterionResult> criterion_leibniz(const SuiteConfig& config);  // 4 (symbolic+numeric)
CriterionResult criterion_composition(const SuiteConfig& config);           // 5
CriterionResult criterion_abelian_reduction(const SuiteConfig& config);     // 6
std::vector<CriterionResult> criterion_heat(const SuiteConfig& config);     // 7 (+extras)
std::vector<CriterionResult> criterion_decay(const SuiteConfig& config);    // 8
CriterionResult criterion_bessel_semigroup(const SuiteConfig& config);      // 9
CriterionResult criterion_sobolev_embedding(const SuiteConfig& config);     // 10
std::vector<CriterionResult> criterion_representation(const SuiteConfig& config);  // 11

/// Runs everything (criterion 12's runtime bookkeeping included), printing
/// one line per criterion to stdout, and returns the results.  When the
/// config names an output directory a JSON summary and CSV tables land
/// there.
std::vector<CriterionResult> run_acceptance_suite(const SuiteConfig& config);

/// Writes the JSON summary; helper shared with the CLI.
void write_suite_report(const std::vector<CriterionResult>& results, const SuiteConfig& config,
                        const std::string& path);

}  // namespace nilcalc
