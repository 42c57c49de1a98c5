#include <secretary/optimize.hpp>

#include <secretary/dp.hpp>
#include <secretary/rational.hpp>
#include <secretary/unimodal.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "kernels.hpp"

namespace secretary::optimize {

namespace {

template <class Num>
struct RowCache {
    RowCache(int n_, int b_) : n(n_), b(b_), rows(static_cast<std::size_t>(b_ + 1)),
                               built(static_cast<std::size_t>(b_ + 1), 0) {}
    const std::vector<Num>& get(int r) {
        if (!built[static_cast<std::size_t>(r)]) {
            rows[static_cast<std::size_t>(r)] = detail::win_accept_row<Num>(n, b, r);
            built[static_cast<std::size_t>(r)] = 1;
        }
        return rows[static_cast<std::size_t>(r)];
    }
    int n, b;
    std::vector<std::vector<Num>> rows;
    std::vector<char> built;
};

template <class Num>
std::pair<int, Num> slp_argmax(int n, int b, int r, const SearchOptions& opts,
                               RowCache<Num>& cache) {
    const detail::SlpProfile<Num> profile(n, b, r, cache.get(r));
    int best_s = 0;
    Num best_v = profile.value(0);  // the trivial b/n family; smallest s on ties
    if (r <= n - 1) {
        auto scan = [&] {
            for (int s = r; s <= n - 1; ++s) {
                const Num v = profile.value(s);
                if (v > best_v) {
                    best_v = v;
                    best_s = s;
                }
            }
        };
        if constexpr (std::is_same_v<Num, double>) {
            if (n <= opts.slp_enumeration_cutoff) {
                scan();
            } else {
                const DiscreteMax m =
                    ternary_search_max([&](int s) { return profile.value(s); }, r, n - 1);
                if (m.value > best_v) {
                    best_v = m.value;
                    best_s = m.x;
                }
            }
        } else {
            scan();  // exact mode always enumerates
        }
    }
    return {best_s, best_v};
}

template <class Num>
std::tuple<int, int, Num> dlp_argmax(int n, int b, int r1, int r2, const SearchOptions& opts,
                                     RowCache<Num>& cache) {
    const detail::DlpEvaluator<Num> ev(n, b, r1, r2, cache.get(r1), cache.get(r2));
    int best_s1 = r1;
    int best_s2 = r1 + 1;
    Num best_v = ev.value(best_s1, best_s2);
    auto grid_scan = [&] {
        for (int s1 = r1; s1 <= n - 2; ++s1)
            for (int s2 = s1 + 1; s2 <= n - 1; ++s2) {
                const Num v = ev.value(s1, s2);
                if (v > best_v) {  // ascending scan keeps the lex-smallest tie
                    best_v = v;
                    best_s1 = s1;
                    best_s2 = s2;
                }
            }
    };
    if constexpr (std::is_same_v<Num, double>) {
        if (n <= opts.dlp_grid_cutoff) {
            grid_scan();
            return {best_s1, best_s2, best_v};
        }
        // coordinate-wise search from a proportional starting point
        int s1 = std::clamp(static_cast<int>(std::lround(0.35 * n)), r1, n - 2);
        int s2 = std::clamp(static_cast<int>(std::lround(0.67 * n)), s1 + 1, n - 1);
        for (int sweep = 0; sweep < 64; ++sweep) {
            const DiscreteMax m1 =
                ternary_search_max([&](int x) { return ev.value(x, s2); }, r1, s2 - 1);
            const int ns1 = m1.x;
            const DiscreteMax m2 =
                ternary_search_max([&](int x) { return ev.value(ns1, x); }, ns1 + 1, n - 1);
            const int ns2 = m2.x;
            const bool fixed_point = ns1 == s1 && ns2 == s2;
            s1 = ns1;
            s2 = ns2;
            if (fixed_point) break;
        }
        // lex-smallest polish over a +-2 window around the fixed point
        best_s1 = s1;
        best_s2 = s2;
        best_v = ev.value(s1, s2);
        for (int a = std::max(r1, s1 - 2); a <= std::min(n - 2, s1 + 2); ++a)
            for (int c = std::max(a + 1, s2 - 2); c <= std::min(n - 1, s2 + 2); ++c) {
                const Num v = ev.value(a, c);
                const bool lex_smaller = a < best_s1 || (a == best_s1 && c < best_s2);
                if (v > best_v || (v == best_v && lex_smaller)) {
                    best_v = v;
                    best_s1 = a;
                    best_s2 = c;
                }
            }
        return {best_s1, best_s2, best_v};
    } else {
        grid_scan();  // exact mode always enumerates
        return {best_s1, best_s2, best_v};
    }
}

template <class Num>
OptimizationReport slp_optimum_impl(int n, int b, const SearchOptions& opts) {
    RowCache<Num> cache(n, b);
    OptimizationReport rep;
    int best_r = 1;
    int best_s = 0;
    Num best_v(-1);
    for (int r = 1; r <= b; ++r) {
        const auto [s, v] = slp_argmax<Num>(n, b, r, opts, cache);
        rep.trace.push_back(Candidate{SingleLevelPolicy{s, r}, detail::to_float(v)});
        if (v > best_v) {  // ascending r keeps the smallest rank level on ties
            best_v = v;
            best_r = r;
            best_s = s;
        }
    }
    rep.best = SingleLevelPolicy{best_s, best_r};
    rep.value = detail::wrap(detail::slp_value<Num>(n, b, best_s, best_r));
    return rep;
}

template <class Num>
OptimizationReport dlp_optimum_impl(int n, int b, const SearchOptions& opts) {
    RowCache<Num> cache(n, b);
    OptimizationReport rep;
    int best_r1 = 0, best_r2 = 0, best_s1 = 0, best_s2 = 0;
    Num best_v(-1);
    for (int r1 = 1; r1 <= std::min(b - 1, n - 2); ++r1)
        for (int r2 = r1 + 1; r2 <= b; ++r2) {
            const auto [s1, s2, v] = dlp_argmax<Num>(n, b, r1, r2, opts, cache);
            rep.trace.push_back(
                Candidate{DoubleLevelPolicy{s1, s2, r1, r2}, detail::to_float(v)});
            if (v > best_v) {  // ascending pairs keep the lex-smallest tie
                best_v = v;
                best_r1 = r1;
                best_r2 = r2;
                best_s1 = s1;
                best_s2 = s2;
            }
        }
    if (best_r1 == 0) {
        std::ostringstream os;
        os << "dlp_optimum: no feasible double-level policy for n=" << n << ", b=" << b;
        throw std::domain_error(os.str());
    }
    rep.best = DoubleLevelPolicy{best_s1, best_s2, best_r1, best_r2};
    rep.value =
        detail::wrap(detail::dlp_value<Num>(n, b, best_s1, best_s2, best_r1, best_r2));
    return rep;
}

}  // namespace

SlpThresholdResult slp_best_threshold(const ProblemInstance& inst, int r, NumericMode mode,
                                      const SearchOptions& opts) {
    inst.validate();
    if (r < 1 || r > inst.b) {
        std::ostringstream os;
        os << "slp_best_threshold: requires 1 <= r <= b (got r=" << r << ", b=" << inst.b << ")";
        throw std::domain_error(os.str());
    }
    if (mode == NumericMode::float64) {
        RowCache<double> cache(inst.n, inst.b);
        const auto [s, v] = slp_argmax<double>(inst.n, inst.b, r, opts, cache);
        return {s, WinProbability::approx(detail::slp_value<double>(inst.n, inst.b, s, r))};
    }
    RowCache<Rational> cache(inst.n, inst.b);
    const auto [s, v] = slp_argmax<Rational>(inst.n, inst.b, r, opts, cache);
    return {s, WinProbability::exact(detail::slp_value<Rational>(inst.n, inst.b, s, r))};
}

OptimizationReport slp_optimum(const ProblemInstance& inst, NumericMode mode,
                               const SearchOptions& opts) {
    inst.validate();
    OptimizationReport rep = mode == NumericMode::float64
                                 ? slp_optimum_impl<double>(inst.n, inst.b, opts)
                                 : slp_optimum_impl<Rational>(inst.n, inst.b, opts);
    rep.relative_error_pct = relative_error(inst, rep.value);
    return rep;
}

DlpThresholdsResult dlp_best_thresholds(const ProblemInstance& inst, int r1, int r2,
                                        NumericMode mode, const SearchOptions& opts) {
    inst.validate();
    if (r1 < 1 || r1 >= r2 || r2 > inst.b) {
        std::ostringstream os;
        os << "dlp_best_thresholds: requires 1 <= r1 < r2 <= b (got r1=" << r1 << ", r2=" << r2
           << ", b=" << inst.b << ")";
        throw std::domain_error(os.str());
    }
    if (r1 > inst.n - 2) {
        std::ostringstream os;
        os << "dlp_best_thresholds: no feasible (s1, s2) with r1 <= s1 < s2 <= n-1 (got r1="
           << r1 << ", n=" << inst.n << ")";
        throw std::domain_error(os.str());
    }
    if (mode == NumericMode::float64) {
        RowCache<double> cache(inst.n, inst.b);
        const auto [s1, s2, v] = dlp_argmax<double>(inst.n, inst.b, r1, r2, opts, cache);
        return {s1, s2,
                WinProbability::approx(detail::dlp_value<double>(inst.n, inst.b, s1, s2, r1, r2))};
    }
    RowCache<Rational> cache(inst.n, inst.b);
    const auto [s1, s2, v] = dlp_argmax<Rational>(inst.n, inst.b, r1, r2, opts, cache);
    return {s1, s2,
            WinProbability::exact(detail::dlp_value<Rational>(inst.n, inst.b, s1, s2, r1, r2))};
}

OptimizationReport dlp_optimum(const ProblemInstance& inst, NumericMode mode,
                               const SearchOptions& opts) {
    inst.validate();
    if (inst.b < 2) {
        std::ostringstream os;
        os << "dlp_optimum: requires b >= 2 (got b=" << inst.b << ")";
        throw std::domain_error(os.str());
    }
    OptimizationReport rep = mode == NumericMode::float64
                                 ? dlp_optimum_impl<double>(inst.n, inst.b, opts)
                                 : dlp_optimum_impl<Rational>(inst.n, inst.b, opts);
    rep.relative_error_pct = relative_error(inst, rep.value);
    return rep;
}

double relative_error(const ProblemInstance& inst, const WinProbability& value) {
    inst.validate();
    const double p_opt = dp::optimal_policy_dp(inst).value.value();
    const double v = value.value();
    if (v > p_opt + 1e-12) {
        std::ostringstream os;
        os << "relative_error: value " << v << " exceeds the optimal-policy value " << p_opt
           << " beyond float slack";
        throw std::logic_error(os.str());
    }
    const double err = (p_opt - v) / p_opt * 100.0;
    return err < 0.0 ? 0.0 : err;  // clamp float dust on exact-tie inputs
}

}  // namespace secretary::optimize
