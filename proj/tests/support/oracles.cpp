#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <variant>

namespace oracles {

using secretary::BigInt;
using secretary::DoubleLevelPolicy;
using secretary::MultiLevelPolicy;
using secretary::Policy;
using secretary::Rational;
using secretary::SingleLevelPolicy;

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational rank_pmf(int n, int i, int j, int k) {
    const BigInt num = choose(j - 1, k - 1) * choose(n - j, i - k);
    return Rational(num, choose(n - 1, i - 1));
}

std::vector<int> relative_ranks(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) {
        int rank = 1;
        for (int j = 0; j < i; ++j)
            if (perm[j] < perm[i]) ++rank;
        ranks[i] = rank;
    }
    return ranks;
}

// acceptance level at position i (1-based), straight from the policy shapes
int level_at(const Policy& policy, int i) {
    return std::visit(
        [i](const auto& p) -> int {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SingleLevelPolicy>) {
                return i > p.s ? p.r : 0;
            } else if constexpr (std::is_same_v<P, DoubleLevelPolicy>) {
                if (i <= p.s1) return 0;
                return i <= p.s2 ? p.r1 : p.r2;
            } else {
                int level = 0;
                for (int t : p.thresholds)
                    if (t < i) ++level;
                return level;
            }
        },
        policy);
}

int naive_apply(const std::vector<int>& perm, const Policy& policy) {
    const int n = static_cast<int>(perm.size());
    const std::vector<int> ranks = relative_ranks(perm);
    for (int i = 1; i < n; ++i)
        if (ranks[i - 1] <= level_at(policy, i)) return perm[i - 1];
    return perm[n - 1];
}

Rational win_fraction(int n, int b, const Policy& policy) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    BigInt wins = 0;
    do {
        if (naive_apply(perm, policy) <= b) ++wins;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(wins, factorial(n));
}

namespace {

Rational best_stopping_value(const std::vector<std::vector<int>>& perms,
                             const std::vector<std::vector<int>>& ranks,
                             const std::vector<int>& consistent, int i, int n, int b) {
    BigInt stop_wins = 0;
    for (int idx : consistent)
        if (perms[idx][i - 1] <= b) ++stop_wins;
    const Rational stop(stop_wins, BigInt(consistent.size()));
    if (i == n) return stop;

    // partition the consistent orders by the next relative rank
    std::vector<std::vector<int>> children(static_cast<std::size_t>(i) + 1);
    for (int idx : consistent) children[ranks[idx][i] - 1].push_back(idx);
    Rational cont = 0;
    for (const auto& child : children) {
        if (child.empty()) continue;
        cont += Rational(BigInt(child.size()), BigInt(consistent.size())) *
                best_stopping_value(perms, ranks, child, i + 1, n, b);
    }
    return std::max(stop, cont);
}

}  // namespace

Rational optimal_value(int n, int b) {
    if (n > 8) throw std::domain_error("oracle optimal_value: n too large");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> perms;
    std::vector<std::vector<int>> ranks;
    do {
        perms.push_back(perm);
        ranks.push_back(relative_ranks(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<int> all(perms.size());
    std::iota(all.begin(), all.end(), 0);
    return best_stopping_value(perms, ranks, all, 1, n, b);
}

double classical_optimum(int n, int* s_star) {
    double best = 1.0 / n;  // never skipping anyone
    int best_s = 0;
    for (int s = 1; s <= n - 1; ++s) {
        double harmonic = 0.0;
        for (int i = s; i <= n - 1; ++i) harmonic += 1.0 / i;
        const double value = (static_cast<double>(s) / n) * harmonic;
        if (value > best) {
            best = value;
            best_s = s;
        }
    }
    if (s_star) *s_star = best_s;
    return best;
}

}  // namespace oracles
