#pragma once

#include <secretary/rational.hpp>

#include <vector>

namespace secretary {

// (x)_m = x(x-1)...(x-m+1); 1 when m = 0, 0 when m > x.
BigInt falling_factorial(int x, int m);

// C(n, k) by the multiplicative recurrence; 0 outside 0 <= k <= n.
BigInt binomial(int n, int k);

// Row C(t, 0..len-1); entries with k > t are 0. Used to batch exact
// hypergeometric sums without recomputing binomials per term.
std::vector<BigInt> binomial_row(int t, int len);

// (a)_m / (c)_m evaluated as a product of per-factor ratios so the value never
// leaves double range even when the factorials themselves would overflow.
// Requires c >= m (positive denominator); returns 0 when a < m.
double falling_factorial_ratio(int a, int c, int m);

// P(Y_i = k | X_i = j) for a uniformly random order of n candidates, where
// X_i is the absolute rank of the candidate at position i and Y_i its rank
// among the first i: C(j-1,k-1) C(n-j,i-k) / C(n-1,i-1).
// Infeasible parameter combinations yield 0.
double hypergeometric_rank_pmf(int n, int i, int j, int k);
Rational hypergeometric_rank_pmf_exact(int n, int i, int j, int k);

}  // namespace secretary
