#include <secretary/combinatorics.hpp>

#include <sstream>
#include <stdexcept>

namespace secretary {

BigInt falling_factorial(int x, int m) {
    if (x < 0 || m < 0) {
        std::ostringstream os;
        os << "falling_factorial: requires x >= 0 and m >= 0 (got x=" << x << ", m=" << m << ")";
        throw std::domain_error(os.str());
    }
    if (m > x) return 0;
    BigInt acc = 1;
    for (int t = 0; t < m; ++t) acc *= x - t;
    return acc;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    // every partial product is itself C(n-k+t, t), so the division is exact
    for (int t = 1; t <= k; ++t) {
        acc *= n - k + t;
        acc /= t;
    }
    return acc;
}

std::vector<BigInt> binomial_row(int t, int len) {
    std::vector<BigInt> row(static_cast<std::size_t>(len));
    if (len == 0) return row;
    row[0] = t >= 0 ? 1 : 0;
    for (int k = 1; k < len; ++k) {
        if (k > t) {
            row[static_cast<std::size_t>(k)] = 0;
        } else {
            row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * (t - k + 1) / k;
        }
    }
    return row;
}

double falling_factorial_ratio(int a, int c, int m) {
    if (a < m) return 0.0;
    double acc = 1.0;
    for (int t = 0; t < m; ++t) acc *= static_cast<double>(a - t) / static_cast<double>(c - t);
    return acc;
}

double hypergeometric_rank_pmf(int n, int i, int j, int k) {
    if (k < 1 || k > i || j < k || j - k > n - i) return 0.0;
    // Evaluated through the swapped orientation C(i-1,k-1) C(n-i,j-k) / C(n-1,j-1):
    // its lower indices stay <= j, and pairing each of the j-1 numerator factors
    // with one denominator factor keeps every partial product bounded.
    double acc = 1.0;
    int a = 1;  // factor index inside C(i-1, k-1)
    int c = 1;  // factor index inside C(n-i, j-k)
    for (int m = 1; m <= j - 1; ++m) {
        double num;
        if (a <= k - 1) {
            num = static_cast<double>(i - a) / static_cast<double>(a);
            ++a;
        } else {
            num = static_cast<double>(n - i - c + 1) / static_cast<double>(c);
            ++c;
        }
        acc *= num * (static_cast<double>(m) / static_cast<double>(n - m));
    }
    return acc;
}

Rational hypergeometric_rank_pmf_exact(int n, int i, int j, int k) {
    if (k < 1 || k > i || j < k || j - k > n - i) return Rational(0);
    return Rational(binomial(j - 1, k - 1) * binomial(n - j, i - k), binomial(n - 1, i - 1));
}

}  // namespace secretary
