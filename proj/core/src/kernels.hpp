#pragma once

// Internal numeric engine shared by the probability, DP, and optimizer
// translation units. Everything is templated over the scalar: double for
// large-n work, Rational for authoritative exact results. Not installed.

#include <secretary/combinatorics.hpp>
#include <secretary/rational.hpp>
#include <secretary/types.hpp>

#include <algorithm>
#include <type_traits>
#include <vector>

namespace secretary::detail {

template <class Num>
inline Num ratio_of(long long p, long long q) {
    if constexpr (std::is_same_v<Num, double>)
        return static_cast<double>(p) / static_cast<double>(q);
    else
        return Rational(p, q);
}

template <class Num>
inline double to_float(const Num& v) {
    if constexpr (std::is_same_v<Num, double>)
        return v;
    else
        return v.template convert_to<double>();
}

template <class Num>
inline WinProbability wrap(const Num& v) {
    if constexpr (std::is_same_v<Num, double>)
        return WinProbability::approx(v);
    else
        return WinProbability::exact(v);
}

template <class Num>
inline Num rank_pmf(int n, int i, int j, int k) {
    if constexpr (std::is_same_v<Num, double>)
        return hypergeometric_rank_pmf(n, i, j, k);
    else
        return hypergeometric_rank_pmf_exact(n, i, j, k);
}

// --- w_r(i) = P(Y_i <= r and X_i <= b), the winning-stop weight -------------
//
// w_r(i) = (1/n) (r + sum_{j=r+1}^{b} sum_k P(Y_i = k | X_i = j)): absolute
// ranks j <= r always look acceptable, the rest contribute the hypergeometric
// mass of looking at least as good as r.

inline std::vector<double> win_accept_row_float(int n, int b, int r) {
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);  // w[i], i = 1..n-1
    for (int i = 1; i <= n - 1; ++i) {
        double sum = 0.0;
        for (int j = r + 1; j <= b; ++j) {
            const int kmax = std::min(r, i);
            const int kmin = std::max(1, j - (n - i));
            if (kmin > kmax) continue;
            double t = hypergeometric_rank_pmf(n, i, j, kmin);
            double inner = t;
            for (int k = kmin; k < kmax; ++k) {
                t *= (static_cast<double>(i - k) * static_cast<double>(j - k)) /
                     (static_cast<double>(k) * static_cast<double>(n - i - j + k + 1));
                inner += t;
            }
            sum += inner;
        }
        w[static_cast<std::size_t>(i)] = (static_cast<double>(r) + sum) / static_cast<double>(n);
    }
    return w;
}

inline std::vector<Rational> win_accept_row_exact(int n, int b, int r) {
    std::vector<Rational> w(static_cast<std::size_t>(n));
    // Pascal rows make every hypergeometric term two lookups over the common
    // denominator C(n-1, i-1), so each w value costs one gcd-reduction.
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(std::max(0, b - r)));
    for (int j = r + 1; j <= b; ++j) rows.push_back(binomial_row(n - j, n));
    const std::vector<BigInt> denom = binomial_row(n - 1, n);
    std::vector<std::vector<BigInt>> small(static_cast<std::size_t>(b + 1));
    for (int j = r + 1; j <= b; ++j) small[static_cast<std::size_t>(j)] = binomial_row(j - 1, r + 1);
    for (int i = 1; i <= n - 1; ++i) {
        BigInt num = 0;
        for (int j = r + 1; j <= b; ++j) {
            const int kmax = std::min(r, i);
            const int kmin = std::max(1, j - (n - i));
            const auto& cnj = rows[static_cast<std::size_t>(j - r - 1)];
            const auto& cj = small[static_cast<std::size_t>(j)];
            for (int k = kmin; k <= kmax; ++k)
                num += cj[static_cast<std::size_t>(k - 1)] * cnj[static_cast<std::size_t>(i - k)];
        }
        const BigInt& d = denom[static_cast<std::size_t>(i - 1)];
        w[static_cast<std::size_t>(i)] = Rational(r * d + num, n * d);
    }
    return w;
}

template <class Num>
inline std::vector<Num> win_accept_row(int n, int b, int r) {
    if constexpr (std::is_same_v<Num, double>)
        return win_accept_row_float(n, b, r);
    else
        return win_accept_row_exact(n, b, r);
}

// (x)_r for x = 0..n-1, built incrementally: (x)_r = (x-1)_r * x/(x-r).
template <class Num>
inline std::vector<Num> falling_factorial_row(int n, int r) {
    std::vector<Num> ff(static_cast<std::size_t>(n), Num(0));
    if (r >= n) return ff;
    Num acc(1);
    for (int t = 2; t <= r; ++t) acc *= t;  // r!
    ff[static_cast<std::size_t>(r)] = acc;
    for (int x = r + 1; x <= n - 1; ++x)
        ff[static_cast<std::size_t>(x)] =
            ff[static_cast<std::size_t>(x - 1)] * ratio_of<Num>(x, x - r);
    return ff;
}

// --- canonical single-policy evaluations ------------------------------------

// Winning probability of the single-level policy pi(s, r): the no-stop weight
// (s)_r/(i-1)_r decays by (i-1-r)/(i-1) per position, and the forced
// acceptance at position n wins with probability b/n.
template <class Num>
inline Num slp_value(int n, int b, int s, int r) {
    if (s <= r - 1 || s == n - 1) return ratio_of<Num>(b, n);
    const std::vector<Num> w = win_accept_row<Num>(n, b, r);
    Num acc(0);
    Num nostop(1);  // (s)_r / (i-1)_r
    for (int i = s + 1; i <= n - 1; ++i) {
        if (i > s + 1) nostop *= ratio_of<Num>(i - 1 - r, i - 1);
        acc += nostop * w[static_cast<std::size_t>(i)];
    }
    nostop *= ratio_of<Num>(n - 1 - r, n - 1);
    acc += nostop * ratio_of<Num>(b, n);
    return acc;
}

// Winning probability of the double-level policy. The stop at position s2+1 is
// evaluated through (s1)_{r1}/(s2)_{r1} * w_{r2}(s2+1): for s2 >= r2 this is
// an algebraic identity of the joint no-stop weight, and for s2 < r2 it is the
// correct limit (the second phase then stops at s2+1 with certainty, so the
// positions beyond s2+1 and the forced-acceptance tail contribute nothing).
template <class Num>
inline Num dlp_value(int n, int b, int s1, int s2, int r1, int r2) {
    const std::vector<Num> w1 = win_accept_row<Num>(n, b, r1);
    Num acc(0);
    Num nostop1(1);  // (s1)_{r1} / (i-1)_{r1}
    for (int i = s1 + 1; i <= s2; ++i) {
        if (i > s1 + 1) nostop1 *= ratio_of<Num>(i - 1 - r1, i - 1);
        acc += nostop1 * w1[static_cast<std::size_t>(i)];
    }
    nostop1 *= ratio_of<Num>(s2 - r1, s2);  // now (s1)_{r1} / (s2)_{r1}
    if (s2 == n - 1) return acc + nostop1 * ratio_of<Num>(b, n);
    const std::vector<Num> w2 = win_accept_row<Num>(n, b, r2);
    acc += nostop1 * w2[static_cast<std::size_t>(s2 + 1)];
    if (s2 >= r2) {
        // joint no-stop weight (s1)_{r1} (s2-r1)_{r2-r1} / (i-1)_{r2}, i >= s2+2
        Num jnt(1);
        for (int t = 0; t < r1; ++t) jnt *= ratio_of<Num>(s1 - t, s2 + 1 - t);
        for (int t = r1; t < r2; ++t) jnt *= ratio_of<Num>(s2 - t, s2 + 1 - t);
        for (int i = s2 + 2; i <= n - 1; ++i) {
            acc += jnt * w2[static_cast<std::size_t>(i)];
            jnt *= ratio_of<Num>(i - r2, i);
        }
        acc += jnt * ratio_of<Num>(b, n);
    }
    return acc;
}

// --- batch evaluators for the optimizers ------------------------------------
//
// Both profiles aggregate over stop positions with suffix sums. Suffix (never
// prefix) order matters in float mode: the terms span a dynamic range of about
// n^r, and a prefix-sum difference would cancel catastrophically for large s
// while a suffix difference is led by its first retained term.

template <class Num>
class SlpProfile {
  public:
    SlpProfile(int n, int b, int r, const std::vector<Num>& w)
        : n_(n), r_(r), trivial_(ratio_of<Num>(b, n)), tail_(0),
          ff_(falling_factorial_row<Num>(n, r)) {
        suffix_.assign(static_cast<std::size_t>(n + 1), Num(0));
        if (r >= n) return;  // value(s) is b/n on the whole domain
        for (int i = n - 1; i >= r + 1; --i)
            suffix_[static_cast<std::size_t>(i)] =
                suffix_[static_cast<std::size_t>(i + 1)] +
                w[static_cast<std::size_t>(i)] / ff_[static_cast<std::size_t>(i - 1)];
        tail_ = trivial_ / ff_[static_cast<std::size_t>(n - 1)];
    }

    // winning probability of pi(s, r); s in {0} union [r, n-1]
    Num value(int s) const {
        if (s <= r_ - 1 || s == n_ - 1) return trivial_;
        return ff_[static_cast<std::size_t>(s)] *
               (suffix_[static_cast<std::size_t>(s + 1)] + tail_);
    }

  private:
    int n_;
    int r_;
    Num trivial_;
    Num tail_;
    std::vector<Num> ff_;
    std::vector<Num> suffix_;
};

template <class Num>
class DlpEvaluator {
  public:
    DlpEvaluator(int n, int b, int r1, int r2, const std::vector<Num>& w1,
                 const std::vector<Num>& w2)
        : n_(n), r1_(r1), r2_(r2), trivial_(ratio_of<Num>(b, n)),
          ff1_(falling_factorial_row<Num>(n, r1)), w2_(&w2) {
        s1_suffix_.assign(static_cast<std::size_t>(n + 1), Num(0));
        for (int i = n - 1; i >= r1 + 1; --i)
            s1_suffix_[static_cast<std::size_t>(i)] =
                s1_suffix_[static_cast<std::size_t>(i + 1)] +
                w1[static_cast<std::size_t>(i)] / ff1_[static_cast<std::size_t>(i - 1)];
        // (x - r1)_{r2 - r1} for x >= r2
        ffj_.assign(static_cast<std::size_t>(n), Num(0));
        if (r2 <= n - 1) {
            Num acc(1);
            for (int t = 2; t <= r2 - r1; ++t) acc *= t;
            ffj_[static_cast<std::size_t>(r2)] = acc;
            for (int x = r2 + 1; x <= n - 1; ++x)
                ffj_[static_cast<std::size_t>(x)] =
                    ffj_[static_cast<std::size_t>(x - 1)] * ratio_of<Num>(x - r1, x - r2);
        }
        const std::vector<Num> ff2 = falling_factorial_row<Num>(n, r2);
        // K[s2] = sum_{i=s2+2}^{n-1} w_{r2}(i)/(i-1)_{r2} + (b/n)/(n-1)_{r2}
        k2_.assign(static_cast<std::size_t>(n), Num(0));
        if (r2 <= n - 2) {
            k2_[static_cast<std::size_t>(n - 2)] =
                trivial_ / ff2[static_cast<std::size_t>(n - 1)];
            for (int s2 = n - 3; s2 >= r2; --s2)
                k2_[static_cast<std::size_t>(s2)] =
                    k2_[static_cast<std::size_t>(s2 + 1)] +
                    w2[static_cast<std::size_t>(s2 + 2)] / ff2[static_cast<std::size_t>(s2 + 1)];
        }
    }

    // winning probability of the double-level policy (s1, s2, r1, r2)
    Num value(int s1, int s2) const {
        Num p = ff1_[static_cast<std::size_t>(s1)] *
                (s1_suffix_[static_cast<std::size_t>(s1 + 1)] -
                 s1_suffix_[static_cast<std::size_t>(s2 + 1)]);
        const Num lead = ff1_[static_cast<std::size_t>(s1)] / ff1_[static_cast<std::size_t>(s2)];
        if (s2 == n_ - 1) return p + lead * trivial_;
        p += lead * (*w2_)[static_cast<std::size_t>(s2 + 1)];
        if (s2 >= r2_)
            p += ff1_[static_cast<std::size_t>(s1)] * ffj_[static_cast<std::size_t>(s2)] *
                 k2_[static_cast<std::size_t>(s2)];
        return p;
    }

  private:
    int n_;
    int r1_;
    int r2_;
    Num trivial_;
    std::vector<Num> ff1_;
    std::vector<Num> ffj_;
    std::vector<Num> s1_suffix_;
    std::vector<Num> k2_;
    const std::vector<Num>* w2_;
};

// --- DP stop rows ------------------------------------------------------------

// q(i, k) = P(X_i <= b | Y_i = k) = (i/n) sum_{j=k}^{b} P(Y_i = k | X_i = j)
// for k = 1..kmax, written into q[1..kmax].
inline void stop_row_float(int n, int b, int i, int kmax, std::vector<double>& q) {
    for (int k = 1; k <= kmax; ++k) {
        double t = 1.0;  // term at j = k: C(i-1,k-1)/C(n-1,k-1)
        for (int m = 1; m <= k - 1; ++m)
            t *= static_cast<double>(i - m) / static_cast<double>(n - m);
        double sum = t;
        for (int j = k; j < b; ++j) {
            t *= (static_cast<double>(n - i - j + k) / static_cast<double>(j + 1 - k)) *
                 (static_cast<double>(j) / static_cast<double>(n - j));
            if (t <= 0.0) {
                t = 0.0;
                break;  // C(n-i, j-k) hit its support boundary; later j are 0 too
            }
            sum += t;
        }
        q[static_cast<std::size_t>(k)] = sum * static_cast<double>(i) / static_cast<double>(n);
    }
}

// Pascal-row caches for the exact DP: C(n-j, .) for j = 1..b, C(n-1, .), and
// the small C(j-1, k-1) table.
struct ExactStopRows {
    ExactStopRows(int n, int b) : n_(n), b_(b), denom_(binomial_row(n - 1, n)) {
        rows_.reserve(static_cast<std::size_t>(b));
        for (int j = 1; j <= b; ++j) rows_.push_back(binomial_row(n - j, n));
        small_.reserve(static_cast<std::size_t>(b));
        for (int j = 1; j <= b; ++j) small_.push_back(binomial_row(j - 1, b + 1));
    }

    void fill(int i, int kmax, std::vector<Rational>& q) const {
        for (int k = 1; k <= kmax; ++k) {
            BigInt num = 0;
            for (int j = k; j <= b_; ++j) {
                if (j - k > n_ - i) break;
                num += small_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] *
                       rows_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - k)];
            }
            q[static_cast<std::size_t>(k)] =
                Rational(i * num, n_ * denom_[static_cast<std::size_t>(i - 1)]);
        }
    }

  private:
    int n_;
    int b_;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<BigInt> denom_;
    std::vector<std::vector<BigInt>> small_;
};

}  // namespace secretary::detail
