#pragma once

#include <secretary/types.hpp>

#include <cstdint>
#include <vector>

namespace secretary::dp {

// P(X_i <= b | Y_i = k): the chance that stopping at position i on a candidate
// of relative rank k wins. (i/n) Bayes factor times the hypergeometric tail
// sum over absolute ranks j = k..b; equals [k <= b] at i = n.
WinProbability stop_success_prob(int i, int k, const ProblemInstance& inst,
                                 NumericMode mode = NumericMode::float64);

// Backward induction over the two-state chain (Y_i <= r vs Y_i > r).
// accept_value[i] / continue_value[i] are the value of the state "position i,
// relative rank <= r" and of skipping position i, for i = 1..n-1 ([0] unused).
// continue_action[i] = 1 where skipping is strictly better (ties stop, so the
// recovered threshold is the smallest maximizer).
struct SlpDpResult {
    int s_star = 0;
    WinProbability value;
    std::vector<double> accept_value;
    std::vector<double> continue_value;
    std::vector<std::uint8_t> continue_action;
};

SlpDpResult slp_dp(const ProblemInstance& inst, int r, NumericMode mode = NumericMode::float64);

// Full optimal-policy backward induction over states (position, relative
// rank), with ranks capped at b+1 (all relative ranks > b share one
// continuation state). continue_value[i] = c_i for i = 1..n-1 ([0] unused).
// Threshold recovery: s_j = max({i in [j, n-1] : q(i,j) < c_i} + {j-1});
// a level that never stops before n therefore reports s_j = n-1.
struct OptimalPolicyResult {
    MultiLevelPolicy policy;
    WinProbability value;
    std::vector<double> continue_value;
};

OptimalPolicyResult optimal_policy_dp(const ProblemInstance& inst,
                                      NumericMode mode = NumericMode::float64);

}  // namespace secretary::dp
