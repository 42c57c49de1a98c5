#include <secretary/simulate.hpp>

#include <secretary/combinatorics.hpp>
#include <secretary/rational.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

namespace secretary::simulate {

namespace {

constexpr std::uint64_t kBlockTrials = 65536;

// worst relative rank the policy can ever accept; bounds the kept-best scan
int max_accept_level(const Policy& policy) {
    return std::visit(
        [](const auto& p) -> int {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SingleLevelPolicy>)
                return p.r;
            else if constexpr (std::is_same_v<P, DoubleLevelPolicy>)
                return p.r2;
            else
                return static_cast<int>(p.thresholds.size());
        },
        policy);
}

// Runs one arrival order. best holds the L smallest ranks seen so far in
// ascending order, so a candidate's relative rank is exact whenever it is
// low enough to matter (<= L); anything worse can never be accepted.
int scan_policy(const std::vector<int>& perm, const std::vector<int>& levels, int L,
                std::vector<int>& best) {
    best.clear();
    const int n = static_cast<int>(perm.size());
    for (int pos = 1; pos <= n - 1; ++pos) {
        const int v = perm[static_cast<std::size_t>(pos - 1)];
        const int sz = static_cast<int>(best.size());
        if (sz == static_cast<int>(L) && v > best[static_cast<std::size_t>(L - 1)])
            continue;  // relative rank > L: never accepted, never kept
        const int p = static_cast<int>(
            std::lower_bound(best.begin(), best.end(), v) - best.begin());
        if (p < levels[static_cast<std::size_t>(pos)]) return v;  // Y = p+1 <= level
        if (sz == L) best.pop_back();
        best.insert(best.begin() + p, v);
    }
    return perm[static_cast<std::size_t>(n - 1)];  // forced acceptance at position n
}

std::vector<int> acceptance_levels(const Policy& policy, int n) {
    std::vector<int> levels(static_cast<std::size_t>(n + 1), 0);
    for (int pos = 1; pos <= n; ++pos)
        levels[static_cast<std::size_t>(pos)] = policy_level_at(policy, pos);
    return levels;
}

void validate_for_n(const Policy& policy, int n) {
    // structural validity against n alone (no instance b to check against)
    auto fail = [n](const char* what) {
        std::ostringstream os;
        os << "apply_policy: policy invalid for n=" << n << " (" << what << ")";
        throw std::domain_error(os.str());
    };
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SingleLevelPolicy>) {
                if (p.r < 1) fail("requires r >= 1");
                if (p.s < 0 || p.s > n - 1) fail("requires 0 <= s <= n-1");
            } else if constexpr (std::is_same_v<P, DoubleLevelPolicy>) {
                if (p.r1 < 1 || p.r1 >= p.r2) fail("requires 1 <= r1 < r2");
                if (p.s1 < p.r1 || p.s1 >= p.s2 || p.s2 > n - 1)
                    fail("requires r1 <= s1 < s2 <= n-1");
            } else {
                if (p.thresholds.empty()) fail("requires at least one threshold");
                int prev = 0;
                for (const int s : p.thresholds) {
                    if (s < 0 || s > n - 1) fail("requires thresholds in [0, n-1]");
                    if (s < prev) fail("requires non-decreasing thresholds");
                    prev = s;
                }
            }
        },
        policy);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + index * 0x9e3779b97f4a7c15ull);
}

std::uint64_t PermutationSampler::draw_below(std::uint64_t m) {
    // rejection keeps the draw exactly uniform on [0, m)
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % m;
    std::uint64_t v = rng_();
    while (v >= limit) v = rng_();
    return v % m;
}

void PermutationSampler::fill(std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(draw_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
}

int apply_policy(const std::vector<int>& permutation, const Policy& policy) {
    const int n = static_cast<int>(permutation.size());
    if (n < 1) throw std::domain_error("apply_policy: permutation must be non-empty");
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n + 1), 0);
    for (const int v : permutation) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            std::ostringstream os;
            os << "apply_policy: permutation is not a bijection on 1.." << n;
            throw std::domain_error(os.str());
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    validate_for_n(policy, n);
    const std::vector<int> levels = acceptance_levels(policy, n);
    std::vector<int> best;
    best.reserve(static_cast<std::size_t>(std::min(max_accept_level(policy), n)));
    return scan_policy(permutation, levels, std::min(max_accept_level(policy), n), best);
}

WinProbability brute_force_win_prob(const ProblemInstance& inst, const Policy& policy) {
    inst.validate();
    validate_policy(policy, inst);
    if (inst.n > 10) {
        std::ostringstream os;
        os << "brute_force_win_prob: n=" << inst.n << " too large for n! enumeration (n <= 10)";
        throw std::domain_error(os.str());
    }
    const int n = inst.n;
    const std::vector<int> levels = acceptance_levels(policy, n);
    const int cap = std::min(max_accept_level(policy), n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best;
    best.reserve(static_cast<std::size_t>(cap));
    std::uint64_t wins = 0;
    do {
        if (scan_policy(perm, levels, cap, best) <= inst.b) ++wins;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return WinProbability::exact(Rational(BigInt(wins), falling_factorial(n, n)));
}

SimulationEstimate monte_carlo(const ProblemInstance& inst, const Policy& policy,
                               std::uint64_t trials, std::uint64_t seed, int workers) {
    inst.validate();
    validate_policy(policy, inst);
    if (trials < 1) throw std::domain_error("monte_carlo: requires trials >= 1");
    const int n = inst.n;
    const std::vector<int> levels = acceptance_levels(policy, n);
    const int cap = std::min(max_accept_level(policy), n);
    const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    const unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = workers > 0 ? static_cast<std::size_t>(workers)
                                       : static_cast<std::size_t>(std::max(1u, hw));
    nthreads = std::min<std::size_t>(nthreads, blocks);
    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> partial(nthreads, 0);
    auto body = [&](std::size_t widx) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::vector<int> best;
        best.reserve(static_cast<std::size_t>(cap));
        std::uint64_t wins = 0;
        for (;;) {
            const std::uint64_t k = next.fetch_add(1);
            if (k >= blocks) break;
            PermutationSampler sampler(substream_seed(seed, k));
            const std::uint64_t count = std::min(kBlockTrials, trials - k * kBlockTrials);
            for (std::uint64_t t = 0; t < count; ++t) {
                sampler.fill(perm);
                if (scan_policy(perm, levels, cap, best) <= inst.b) ++wins;
            }
        }
        partial[widx] += wins;
    };
    if (nthreads > 1) {
        std::vector<std::thread> threads;
        threads.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(body, t);
        for (auto& t : threads) t.join();
    } else {
        body(0);
    }
    SimulationEstimate est;
    est.trials = trials;
    est.successes = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    est.estimate = static_cast<double>(est.successes) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
    est.seed = seed;
    return est;
}

}  // namespace secretary::simulate
