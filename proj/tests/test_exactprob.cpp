#include <doctest.h>

#include <secretary/exactprob.hpp>

#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>

using namespace secretary;
using exactprob::dlp_win_prob;
using exactprob::joint_no_stop_prob;
using exactprob::no_stop_prob;
using exactprob::rank_le_given_abs;
using exactprob::slp_win_prob;

namespace {
constexpr NumericMode kExact = NumericMode::exact_rational;
}

TEST_SUITE("exactprob") {

TEST_CASE("no_stop_prob pinned values") {
    CHECK(no_stop_prob(1, 3, 1, kExact).rational() == Rational(1, 2));
    CHECK(no_stop_prob(0, 2, 1, kExact).rational() == 0);
    CHECK(no_stop_prob(4, 7, 2, kExact).rational() == Rational(2, 5));
    CHECK(no_stop_prob(1, 3, 1).value() == doctest::Approx(0.5));
    // s < r: some position in s+1..i-1 surely shows a relative rank <= r
    CHECK(no_stop_prob(2, 9, 3).value() == 0.0);
}

TEST_CASE("no_stop_prob rejects bad arguments") {
    CHECK_THROWS_AS(no_stop_prob(-1, 3, 1), std::domain_error);
    CHECK_THROWS_AS(no_stop_prob(2, 3, 1), std::domain_error);  // i < s + 2
    CHECK_THROWS_AS(no_stop_prob(1, 3, 0), std::domain_error);
}

TEST_CASE("rank_le_given_abs pinned values") {
    const ProblemInstance inst{4, 2};
    CHECK(rank_le_given_abs(2, 2, 1, inst, kExact).rational() == Rational(2, 3));
    CHECK(rank_le_given_abs(3, 1, 2, inst).value() == 1.0);   // j <= r
    CHECK(rank_le_given_abs(1, 4, 1, inst).value() == 1.0);   // first candidate
    CHECK_THROWS_AS(rank_le_given_abs(2, 5, 1, inst), std::domain_error);  // j > n
    CHECK_THROWS_AS(rank_le_given_abs(5, 2, 1, inst), std::domain_error);  // i > n
}

TEST_CASE("rank_le_given_abs matches direct pmf sums") {
    const ProblemInstance inst{9, 4};
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 9; ++j)
            for (int r = 1; r <= 5; ++r) {
                Rational want = 0;
                for (int k = 1; k <= std::min(r, i); ++k) want += oracles::rank_pmf(9, i, j, k);
                CHECK(rank_le_given_abs(i, j, r, inst, kExact).rational() == want);
            }
}

TEST_CASE("slp_win_prob pinned values") {
    CHECK(slp_win_prob({10, 3}, {9, 2}, kExact).rational() == Rational(3, 10));
    CHECK(slp_win_prob({5, 1}, {2, 1}, kExact).rational() == Rational(13, 30));
    CHECK(slp_win_prob({4, 2}, {1, 1}, kExact).rational() == Rational(3, 4));
    CHECK_THROWS_AS(slp_win_prob({10, 3}, {2, 4}), std::domain_error);   // r > b
    CHECK_THROWS_AS(slp_win_prob({10, 3}, {10, 2}), std::domain_error);  // s >= n
}

TEST_CASE("slp_win_prob equals enumeration over all arrival orders") {
    for (int n = 2; n <= 6; ++n)
        for (int b = 1; b <= n; ++b)
            for (int r = 1; r <= b; ++r)
                for (int s = 0; s <= n - 1; ++s) {
                    const Rational want = oracles::win_fraction(n, b, SingleLevelPolicy{s, r});
                    CHECK(slp_win_prob({n, b}, {s, r}, kExact).rational() == want);
                }
}

TEST_CASE("joint_no_stop_prob pinned values") {
    const DoubleLevelPolicy tight{1, 2, 1, 2};
    CHECK(joint_no_stop_prob(tight, 4, {8, 3}, kExact).rational() == Rational(1, 6));
    const DoubleLevelPolicy wide{2, 4, 1, 2};
    CHECK(joint_no_stop_prob(wide, 6, {8, 3}, kExact).rational() == Rational(3, 10));
    // s2 < r2: the looser phase stops at s2 + 1 with certainty
    CHECK(joint_no_stop_prob({2, 3, 2, 4}, 6, {8, 4}).value() == 0.0);
    CHECK_THROWS_AS(joint_no_stop_prob(wide, 5, {8, 3}), std::domain_error);  // i < s2 + 2
    CHECK_THROWS_AS(joint_no_stop_prob(wide, 9, {8, 3}), std::domain_error);  // i > n
}

TEST_CASE("dlp_win_prob pinned values") {
    CHECK(dlp_win_prob({6, 3}, {1, 3, 1, 2}, kExact).rational() == Rational(33, 40));
    CHECK(dlp_win_prob({8, 4}, {2, 5, 2, 3}, kExact).rational() == Rational(43, 56));
}

TEST_CASE("dlp_win_prob rejects invalid policies") {
    CHECK_THROWS_AS(dlp_win_prob({8, 4}, {2, 5, 3, 3}), std::domain_error);  // r1 >= r2
    CHECK_THROWS_AS(dlp_win_prob({8, 4}, {5, 5, 2, 3}), std::domain_error);  // s1 >= s2
    CHECK_THROWS_AS(dlp_win_prob({8, 4}, {2, 8, 2, 3}), std::domain_error);  // s2 >= n
    CHECK_THROWS_AS(dlp_win_prob({8, 4}, {1, 5, 2, 3}), std::domain_error);  // s1 < r1
}

TEST_CASE("dlp_win_prob equals enumeration over all arrival orders") {
    for (int n = 3; n <= 6; ++n)
        for (int b = 2; b <= n; ++b)
            for (int r1 = 1; r1 < b; ++r1)
                for (int r2 = r1 + 1; r2 <= b; ++r2)
                    for (int s1 = r1; s1 <= n - 2; ++s1)
                        for (int s2 = s1 + 1; s2 <= n - 1; ++s2) {
                            const DoubleLevelPolicy pol{s1, s2, r1, r2};
                            const Rational want = oracles::win_fraction(n, b, pol);
                            CHECK(dlp_win_prob({n, b}, pol, kExact).rational() == want);
                        }
}

TEST_CASE("float mode tracks exact mode") {
    for (int n : {37, 120, 300}) {
        const int b = 7;
        for (int r = 1; r <= b; r += 2)
            for (int s = r; s <= n - 1; s += n / 8) {
                const double exact =
                    to_double(slp_win_prob({n, b}, {s, r}, kExact).rational());
                const double approx = slp_win_prob({n, b}, {s, r}).value();
                CHECK(std::abs(approx - exact) <= 1e-12 * exact);
            }
        const DoubleLevelPolicy pol{n / 3, (2 * n) / 3, 2, 5};
        const double exact = to_double(dlp_win_prob({n, b}, pol, kExact).rational());
        const double approx = dlp_win_prob({n, b}, pol).value();
        CHECK(std::abs(approx - exact) <= 1e-12 * exact);
    }
}

}  // TEST_SUITE
