#pragma once

#include <secretary/types.hpp>

#include <vector>

namespace secretary::optimize {

struct Candidate {
    Policy policy;
    double value = 0.0;
};

struct OptimizationReport {
    Policy best;
    WinProbability value;               // re-evaluated through the canonical formula
    double relative_error_pct = 0.0;    // vs the optimal multi-level policy
    std::vector<Candidate> trace;       // best policy per rank level (pair)
};

struct SearchOptions {
    // at or below these sizes the searches are replaced by full enumeration
    int slp_enumeration_cutoff = 500;
    int dlp_grid_cutoff = 250;
};

struct SlpThresholdResult {
    int s_star = 0;
    WinProbability value;
};

// argmax over s of the single-level winning probability at fixed rank level r.
// Candidates are s = 0 (the trivial b/n family) and s in [r, n-1]; ternary
// search with a +-2 window above the enumeration cutoff; smallest s on ties.
SlpThresholdResult slp_best_threshold(const ProblemInstance& inst, int r,
                                      NumericMode mode = NumericMode::float64,
                                      const SearchOptions& opts = {});

// Best single-level policy: full enumeration over r, inner threshold search.
OptimizationReport slp_optimum(const ProblemInstance& inst,
                               NumericMode mode = NumericMode::float64,
                               const SearchOptions& opts = {});

struct DlpThresholdsResult {
    int s1_star = 0;
    int s2_star = 0;
    WinProbability value;
};

// argmax over (s1, s2) at fixed rank levels r1 < r2: coordinate-wise ternary
// search iterated to a fixed point, full-grid enumeration at or below the
// cutoff; lexicographically smallest maximizer on ties.
DlpThresholdsResult dlp_best_thresholds(const ProblemInstance& inst, int r1, int r2,
                                        NumericMode mode = NumericMode::float64,
                                        const SearchOptions& opts = {});

// Best double-level policy: full enumeration over the rank-level pairs.
OptimizationReport dlp_optimum(const ProblemInstance& inst,
                               NumericMode mode = NumericMode::float64,
                               const SearchOptions& opts = {});

// (P_opt - value)/P_opt * 100, where P_opt is the optimal multi-level value.
// Values exceeding P_opt beyond float slack indicate a formula or DP bug and
// raise an error.
double relative_error(const ProblemInstance& inst, const WinProbability& value);

}  // namespace secretary::optimize
