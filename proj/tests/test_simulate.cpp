#include <doctest.h>

#include <secretary/dp.hpp>
#include <secretary/exactprob.hpp>
#include <secretary/simulate.hpp>

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using namespace secretary;
using simulate::apply_policy;
using simulate::brute_force_win_prob;
using simulate::monte_carlo;
using simulate::PermutationSampler;
using simulate::splitmix64;
using simulate::substream_seed;

TEST_SUITE("simulate") {

TEST_CASE("seed derivation is the documented splitmix64 mix") {
    const std::uint64_t golden = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t seed : {0ull, 42ull, 0xdeadbeefull})
        for (std::uint64_t k = 0; k < 5; ++k)
            CHECK(substream_seed(seed, k) == splitmix64(seed + k * golden));
    // the finalizer actually mixes: nearby inputs land far apart
    CHECK(splitmix64(1) != splitmix64(2));
    CHECK(substream_seed(42, 0) != substream_seed(42, 1));
}

TEST_CASE("sampler draws permutations deterministically") {
    PermutationSampler a(7);
    PermutationSampler b(7);
    PermutationSampler c(8);
    std::vector<int> pa, pb, pc;
    bool any_difference = false;
    for (int round = 0; round < 50; ++round) {
        pa.resize(12);
        pb.resize(12);
        pc.resize(12);
        a.fill(pa);
        b.fill(pb);
        c.fill(pc);
        CHECK(pa == pb);
        any_difference = any_difference || pa != pc;
        std::vector<int> sorted = pa;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expected(12);
        std::iota(expected.begin(), expected.end(), 1);
        CHECK(sorted == expected);
    }
    CHECK(any_difference);
}

TEST_CASE("sampler is uniform over the 24 orders of n = 4") {
    // chi-square against the 0.999 quantile at 23 degrees of freedom
    PermutationSampler sampler(20260819);
    std::vector<int> perm(4);
    std::vector<int> counts(24, 0);
    const int draws = 1000000;
    for (int t = 0; t < draws; ++t) {
        sampler.fill(perm);
        int code = 0;
        // Lehmer code of the permutation
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (perm[j] < perm[i]) ++smaller;
            code = code * (4 - i) + smaller;
        }
        ++counts[code];
    }
    const double expected = draws / 24.0;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 49.7282324664315);
}

TEST_CASE("apply_policy pinned runs") {
    CHECK(apply_policy({2, 1}, SingleLevelPolicy{0, 1}) == 2);
    CHECK(apply_policy({2, 1}, SingleLevelPolicy{1, 1}) == 1);
    // skipping everyone forces the final candidate
    CHECK(apply_policy({1, 2, 3}, SingleLevelPolicy{2, 1}) == 3);
    CHECK(apply_policy({3, 1, 4, 2}, DoubleLevelPolicy{1, 2, 1, 2}) == 1);
}

TEST_CASE("apply_policy rejects bad inputs") {
    CHECK_THROWS_AS(apply_policy({1, 1, 3}, SingleLevelPolicy{0, 1}), std::domain_error);
    CHECK_THROWS_AS(apply_policy({1, 2, 4}, SingleLevelPolicy{0, 1}), std::domain_error);
    CHECK_THROWS_AS(apply_policy({1, 2}, SingleLevelPolicy{2, 1}), std::domain_error);  // s >= n
    CHECK_THROWS_AS(apply_policy({1, 2, 3}, DoubleLevelPolicy{1, 3, 1, 2}),
                    std::domain_error);  // s2 >= n
}

TEST_CASE("apply_policy matches the counting oracle on every order") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 7; ++n) {
        std::vector<Policy> policies;
        policies.push_back(SingleLevelPolicy{(n - 1) / 2, 1});
        policies.push_back(SingleLevelPolicy{0, 2});
        if (n >= 3) policies.push_back(DoubleLevelPolicy{1, n - 1, 1, 2});
        policies.push_back(MultiLevelPolicy{std::vector<int>{1, 1, n - 1}});
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            for (const auto& pol : policies)
                CHECK(apply_policy(perm, pol) == oracles::naive_apply(perm, pol));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("optimal policy simulated on every order reproduces its value") {
    for (int n = 2; n <= 6; ++n)
        for (int b = 1; b <= n; b += 2) {
            const auto opt = dp::optimal_policy_dp({n, b}, NumericMode::exact_rational);
            BigInt wins = 0;
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                if (apply_policy(perm, opt.policy) <= b) ++wins;
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(Rational(wins, oracles::factorial(n)) == opt.value.rational());
        }
}

TEST_CASE("brute_force_win_prob pinned values") {
    CHECK(brute_force_win_prob({4, 2}, SingleLevelPolicy{1, 1}).rational() == Rational(3, 4));
    CHECK(brute_force_win_prob({3, 3}, SingleLevelPolicy{1, 1}).rational() == 1);
    CHECK(brute_force_win_prob({5, 1}, SingleLevelPolicy{2, 1}).rational() == Rational(13, 30));
    CHECK_THROWS_AS(brute_force_win_prob({11, 2}, SingleLevelPolicy{3, 1}),
                    std::domain_error);
}

TEST_CASE("monte_carlo is reproducible and worker-independent") {
    const ProblemInstance inst{100, 5};
    const Policy policy = SingleLevelPolicy{50, 3};
    const auto one = monte_carlo(inst, policy, 300000, 42, 1);
    const auto three = monte_carlo(inst, policy, 300000, 42, 3);
    const auto dflt = monte_carlo(inst, policy, 300000, 42);
    CHECK(one.successes == three.successes);
    CHECK(one.successes == dflt.successes);
    CHECK(one.trials == 300000);
    CHECK(one.seed == 42);
    CHECK(one.estimate == doctest::Approx(one.successes / 300000.0).epsilon(1e-15));
    const double p = one.estimate;
    CHECK(one.std_error ==
          doctest::Approx(std::sqrt(p * (1 - p) / 300000.0)).epsilon(1e-12));
}

TEST_CASE("monte_carlo stays within four standard errors of the exact value") {
    const ProblemInstance inst{30, 4};
    const DoubleLevelPolicy policy{8, 19, 1, 3};
    const double exact = exactprob::dlp_win_prob(inst, policy).value();
    const auto est = monte_carlo(inst, policy, 200000, 20260819);
    const double sigma = std::sqrt(exact * (1 - exact) / 200000.0);
    CHECK(std::abs(est.estimate - exact) <= 4 * sigma);
}

TEST_CASE("degenerate trial counts") {
    const ProblemInstance inst{10, 2};
    const Policy policy = SingleLevelPolicy{3, 1};
    const auto est = monte_carlo(inst, policy, 1, 9);
    CHECK((est.estimate == 0.0 || est.estimate == 1.0));
    CHECK(est.trials == 1);
    CHECK_THROWS_AS(monte_carlo(inst, policy, 0, 9), std::domain_error);
}

}  // TEST_SUITE
