#pragma once

#include <secretary/types.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace secretary::simulate {

struct SimulationEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

// splitmix64 finalizer: the documented, versioned mixing function behind all
// derived seeds (substream k of master seed S is mixed from S + k*golden).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Uniform random permutations via Fisher-Yates driven by mt19937_64 with
// modulo-rejection bounded draws. The generator and shuffle are pinned here so
// golden simulation values survive standard-library changes.
class PermutationSampler {
  public:
    explicit PermutationSampler(std::uint64_t seed) : rng_(seed) {}

    // fills perm with a uniform random permutation of ranks 1..perm.size()
    void fill(std::vector<int>& perm);

  private:
    std::uint64_t draw_below(std::uint64_t m);
    std::mt19937_64 rng_;
};

// Runs the policy on one arrival order. permutation[i] is the absolute rank of
// the candidate at position i+1; returns the absolute rank selected (the
// position-n candidate when no earlier stop fires).
int apply_policy(const std::vector<int>& permutation, const Policy& policy);

// Exact win probability by full enumeration of all n! arrival orders (n <= 10).
WinProbability brute_force_win_prob(const ProblemInstance& inst, const Policy& policy);

// Monte Carlo estimate of the winning probability. Trials are partitioned into
// fixed-size blocks, block k running on substream_seed(seed, k), so the result
// depends only on (seed, trials, policy) - never on the worker count.
SimulationEstimate monte_carlo(const ProblemInstance& inst, const Policy& policy,
                               std::uint64_t trials, std::uint64_t seed, int workers = 0);

}  // namespace secretary::simulate
