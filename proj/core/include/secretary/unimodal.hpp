#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

namespace secretary {

struct BracketMax {
    double x = 0.0;
    double value = 0.0;
};

// Golden-section maximization of a unimodal f on [lo, hi], refined until the
// bracket width drops below xtol. One new evaluation per iteration.
template <class F>
BracketMax golden_section_max(F&& f, double lo, double hi, double xtol) {
    constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 >= f2 ? BracketMax{x1, f1} : BracketMax{x2, f2};
}

// First-order-condition cross-check: bisection on the sign of the central
// finite difference. Assumes a unimodal maximum interior to [lo, hi].
template <class F>
BracketMax derivative_bisection_max(F&& f, double lo, double hi, double xtol, double fd_step) {
    auto slope = [&](double x) { return f(x + fd_step) - f(x - fd_step); };
    double a = lo + fd_step, b = hi - fd_step;
    while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        if (slope(m) > 0.0)
            a = m;
        else
            b = m;
    }
    const double x = 0.5 * (a + b);
    return BracketMax{x, f(x)};
}

struct DiscreteMax {
    int x = 0;
    double value = 0.0;
};

// Ternary search for the argmax of a unimodal integer-indexed sequence, with a
// +-2 re-check window and a walk-left pass so plateau ties resolve to the
// smallest index. f is called O(log(hi-lo) + plateau width) times.
template <class F>
DiscreteMax ternary_search_max(F&& f, int lo, int hi) {
    int a = lo, b = hi;
    while (b - a > 8) {
        const int m1 = a + (b - a) / 3;
        const int m2 = b - (b - a) / 3;
        if (f(m1) < f(m2))
            a = m1 + 1;
        else
            b = m2;  // ties keep the left side, biasing toward smaller indices
    }
    int best = a;
    double best_v = f(a);
    for (int s = a + 1; s <= b; ++s) {
        const double v = f(s);
        if (v > best_v) {
            best = s;
            best_v = v;
        }
    }
    // guard window around the ternary landing spot
    for (int s = std::max(lo, best - 2); s <= std::min(hi, best + 2); ++s) {
        const double v = f(s);
        if (v > best_v || (v == best_v && s < best)) {
            best = s;
            best_v = v;
        }
    }
    while (best > lo && f(best - 1) == best_v) --best;
    return DiscreteMax{best, best_v};
}

}  // namespace secretary
