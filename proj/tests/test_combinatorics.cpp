#include <doctest.h>

#include <secretary/combinatorics.hpp>

#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>

using namespace secretary;

TEST_SUITE("combinatorics") {

TEST_CASE("falling factorial basics") {
    CHECK(falling_factorial(5, 3) == 60);
    CHECK(falling_factorial(4, 0) == 1);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(falling_factorial(0, 0) == 1);
    for (int n = 0; n <= 12; ++n) CHECK(falling_factorial(n, n) == oracles::factorial(n));
    CHECK_THROWS_AS(falling_factorial(-1, 2), std::domain_error);
    CHECK_THROWS_AS(falling_factorial(3, -1), std::domain_error);
}

TEST_CASE("binomial matches the factorial definition") {
    for (int n = 0; n <= 20; ++n)
        for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracles::choose(n, k));
}

TEST_CASE("binomial_row matches binomial, zero past the top") {
    for (int t : {0, 1, 5, 17}) {
        const auto row = binomial_row(t, t + 4);
        for (int k = 0; k < t + 4; ++k) CHECK(row[k] == binomial(t, k));
    }
}

TEST_CASE("falling factorial ratio equals the exact quotient") {
    for (int c = 1; c <= 40; ++c)
        for (int a = 0; a <= c; ++a)
            for (int m = 0; m <= c; ++m) {
                const double got = falling_factorial_ratio(a, c, m);
                if (a < m) {
                    CHECK(got == 0.0);
                    continue;
                }
                const Rational want(falling_factorial(a, m), falling_factorial(c, m));
                CHECK(got == doctest::Approx(to_double(want)).epsilon(1e-13));
            }
}

TEST_CASE("falling factorial ratio as a binomial quotient") {
    // (x)_m / (y)_m = C(x, m) / C(y, m) for m <= x <= y
    for (int y = 1; y <= 64; y += 7)
        for (int x = 0; x <= y; x += 3)
            for (int m = 0; m <= x; m += 2) {
                const Rational lhs(falling_factorial(x, m), falling_factorial(y, m));
                const Rational rhs(binomial(x, m), binomial(y, m));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("hypergeometric pmf matches the literal formula") {
    for (int n : {2, 5, 17, 50})
        for (int i = 1; i <= n; i += 3)
            for (int j = 1; j <= n; j += 3)
                for (int k = 1; k <= i; k += 2) {
                    const Rational want = oracles::rank_pmf(n, i, j, k);
                    CHECK(hypergeometric_rank_pmf_exact(n, i, j, k) == want);
                    const double got = hypergeometric_rank_pmf(n, i, j, k);
                    CHECK(std::abs(got - to_double(want)) <= 1e-12 * (to_double(want) + 1.0));
                }
}

TEST_CASE("hypergeometric pmf rows sum to n over i") {
    // the formula is the likelihood of relative rank k given absolute rank j;
    // against the uniform prior 1/n on j and the marginal 1/i on k, the row
    // sums to (1/i) / (1/n) = n / i rather than to one
    for (int n : {6, 23})
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= i; ++k) {
                Rational total = 0;
                double total_f = 0.0;
                for (int j = 1; j <= n; ++j) {
                    total += hypergeometric_rank_pmf_exact(n, i, j, k);
                    total_f += hypergeometric_rank_pmf(n, i, j, k);
                }
                CHECK(total == Rational(n, i));
                CHECK(total_f == doctest::Approx(static_cast<double>(n) / i).epsilon(1e-12));
            }
}

TEST_CASE("hypergeometric pmf is zero off support") {
    CHECK(hypergeometric_rank_pmf(10, 3, 9, 1) == 0.0);   // j - k > n - i
    CHECK(hypergeometric_rank_pmf(10, 5, 2, 4) == 0.0);   // j < k
    CHECK(hypergeometric_rank_pmf(10, 5, 3, 6) == 0.0);   // k > i
    CHECK(hypergeometric_rank_pmf_exact(10, 3, 9, 1) == 0);
}

}  // TEST_SUITE
