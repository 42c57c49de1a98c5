#pragma once

#include <vector>

namespace secretary::asymptotic {

// Integrand of the limiting single-level winning probability:
// (1/x^r) (r + sum_{j=r+1}^{b} sum_{k=1}^{r} C(j-1,k-1) x^{k-1} (1-x)^{j-k}).
double slp_integrand(double x, int r, int b);

// alpha^r * integral_alpha^1 of the integrand; adaptive quadrature at abs_tol.
double slp_asymptotic_win(double alpha, int r, int b, double abs_tol = 1e-10);

// alpha1^{r1} * integral_{alpha1}^{alpha2} f_{r1}
//   + alpha1^{r1} alpha2^{r2-r1} * integral_{alpha2}^{1} f_{r2}.
double dlp_asymptotic_win(double alpha1, double alpha2, int r1, int r2, int b,
                          double abs_tol = 1e-10);

struct AsymptoticPolicy {
    enum class Kind { single_level, double_level };
    Kind kind = Kind::single_level;
    int r1 = 1;           // the only level when kind == single_level
    int r2 = 0;
    double alpha1 = 0.0;  // the only threshold when kind == single_level
    double alpha2 = 0.0;
    double value = 0.0;
};

// Best limiting single-level policy: for each r, golden-section search over
// alpha refined to |delta alpha| < 1e-6; smallest r on value ties.
AsymptoticPolicy slp_asymptotic_optimum(int b, double abs_tol = 1e-10);

// Best limiting double-level policy: enumerate rank pairs; per pair, alternate
// golden-section sweeps in alpha1 and alpha2 until the joint movement drops
// below 1e-7. Rank-pair evaluations run in parallel; the reduction is
// deterministic (lexicographically smallest pair on value ties).
AsymptoticPolicy dlp_asymptotic_optimum(int b, double abs_tol = 1e-10);

// Canonical rounding of a proportional threshold to a finite-n position.
int threshold_from_alpha(double alpha, int n);

struct ConvergencePoint {
    int n = 0;
    double value = 0.0;
};

struct ConvergenceSeries {
    std::vector<ConvergencePoint> points;  // finite-n optima at the fixed levels
    double limit = 0.0;                    // asymptotic optimum at the same levels
};

// Finite-n optimal values at fixed rank level(s) over a grid of n, plus the
// asymptotic limit they converge to.
ConvergenceSeries convergence_series(int b, int r, const std::vector<int>& n_grid);
ConvergenceSeries convergence_series(int b, int r1, int r2, const std::vector<int>& n_grid);

}  // namespace secretary::asymptotic
