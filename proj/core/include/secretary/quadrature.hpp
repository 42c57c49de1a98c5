#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace secretary {

namespace detail {

template <class F>
double simpson_split(F& f, double a, double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // second criterion: the interval estimate has hit double resolution, so
    // further splitting cannot improve an absolute tolerance below it
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(left) + std::abs(right));
    if (std::abs(delta) <= 15.0 * tol || std::abs(delta) <= floor)
        return left + right + delta / 15.0;
    if (depth <= 0) throw std::runtime_error("adaptive_simpson: interval subdivision limit hit");
    return simpson_split(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_split(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with an absolute tolerance (plus a machine
// precision floor for integrands whose magnitude makes the absolute target
// unrepresentable in double).
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol) {
    if (!(abs_tol > 0.0)) throw std::domain_error("adaptive_simpson: requires abs_tol > 0");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_split(f, a, fa, b, fb, m, fm, whole, abs_tol, 48);
}

}  // namespace secretary
