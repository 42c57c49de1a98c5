#pragma once

#include <secretary/types.hpp>

namespace secretary::exactprob {

// P(min{Y_{s+1}, ..., Y_{i-1}} > r): the probability that a policy which
// accepts relative rank <= r has not stopped on positions s+1 .. i-1.
// Equals 0 when s < r, else (s)_r / (i-1)_r.
WinProbability no_stop_prob(int s, int i, int r, NumericMode mode = NumericMode::float64);

// P(Y_i <= r | X_i = j); 1 when j <= r (a candidate can never look worse than
// it is). Hypergeometric tail over the feasible relative ranks.
WinProbability rank_le_given_abs(int i, int j, int r, const ProblemInstance& inst,
                                 NumericMode mode = NumericMode::float64);

// Winning probability of the single-level policy: b/n on the trivial ranges
// (s <= r-1 or s = n-1), otherwise the sum over stop positions plus the
// forced-acceptance tail.
WinProbability slp_win_prob(const ProblemInstance& inst, const SingleLevelPolicy& pol,
                            NumericMode mode = NumericMode::float64);

// P(no stop through position i-1) for a double-level policy:
// (s1)_{r1} (s2-r1)_{r2-r1} / (i-1)_{r2}. Zero when s2 < r2 (the looser phase
// then stops with certainty at position s2+1).
WinProbability joint_no_stop_prob(const DoubleLevelPolicy& pol, int i, const ProblemInstance& inst,
                                  NumericMode mode = NumericMode::float64);

// Winning probability of the double-level policy: phase-1 sum, phase-2 sum,
// and the forced-acceptance tail.
WinProbability dlp_win_prob(const ProblemInstance& inst, const DoubleLevelPolicy& pol,
                            NumericMode mode = NumericMode::float64);

}  // namespace secretary::exactprob
