#include <secretary/exactprob.hpp>

#include <secretary/combinatorics.hpp>
#include <secretary/rational.hpp>

#include <sstream>
#include <stdexcept>

#include "kernels.hpp"

namespace secretary::exactprob {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::domain_error(msg); }

}  // namespace

WinProbability no_stop_prob(int s, int i, int r, NumericMode mode) {
    if (s < 0 || i < s + 2 || r < 1) {
        std::ostringstream os;
        os << "no_stop_prob: requires 0 <= s, s+2 <= i, 1 <= r (got s=" << s << ", i=" << i
           << ", r=" << r << ")";
        fail(os.str());
    }
    if (s < r) {
        // some position t <= r lies in (s, i), and Y_t <= t <= r surely
        return mode == NumericMode::float64 ? WinProbability::approx(0.0)
                                            : WinProbability::exact(Rational(0));
    }
    if (mode == NumericMode::float64)
        return WinProbability::approx(falling_factorial_ratio(s, i - 1, r));
    return WinProbability::exact(
        Rational(falling_factorial(s, r), falling_factorial(i - 1, r)));
}

WinProbability rank_le_given_abs(int i, int j, int r, const ProblemInstance& inst,
                                 NumericMode mode) {
    inst.validate();
    if (i < 1 || i > inst.n || j < 1 || j > inst.n || r < 1) {
        std::ostringstream os;
        os << "rank_le_given_abs: requires 1 <= i <= n, 1 <= j <= n, 1 <= r (got i=" << i
           << ", j=" << j << ", r=" << r << ", n=" << inst.n << ")";
        fail(os.str());
    }
    // j <= r: a candidate's relative rank never exceeds its absolute rank.
    // i = 1: the first candidate always has relative rank 1 <= r.
    if (j <= r || i == 1) {
        return mode == NumericMode::float64 ? WinProbability::approx(1.0)
                                            : WinProbability::exact(Rational(1));
    }
    const int kmax = std::min(r, i);
    if (mode == NumericMode::float64) {
        double p = 0.0;
        for (int k = 1; k <= kmax; ++k) p += hypergeometric_rank_pmf(inst.n, i, j, k);
        return WinProbability::approx(p);
    }
    Rational p(0);
    for (int k = 1; k <= kmax; ++k) p += hypergeometric_rank_pmf_exact(inst.n, i, j, k);
    return WinProbability::exact(p);
}

WinProbability slp_win_prob(const ProblemInstance& inst, const SingleLevelPolicy& pol,
                            NumericMode mode) {
    inst.validate();
    pol.validate(inst);
    if (mode == NumericMode::float64)
        return WinProbability::approx(detail::slp_value<double>(inst.n, inst.b, pol.s, pol.r));
    return WinProbability::exact(detail::slp_value<Rational>(inst.n, inst.b, pol.s, pol.r));
}

WinProbability joint_no_stop_prob(const DoubleLevelPolicy& pol, int i,
                                  const ProblemInstance& inst, NumericMode mode) {
    inst.validate();
    pol.validate(inst);
    if (i < pol.s2 + 2 || i > inst.n) {
        std::ostringstream os;
        os << "joint_no_stop_prob: requires s2+2 <= i <= n (got i=" << i << ", s2=" << pol.s2
           << ", n=" << inst.n << ")";
        fail(os.str());
    }
    if (pol.s2 < pol.r2) {
        // the looser phase stops at position s2+1 with certainty
        return mode == NumericMode::float64 ? WinProbability::approx(0.0)
                                            : WinProbability::exact(Rational(0));
    }
    if (mode == NumericMode::float64) {
        // (s1)_{r1} (s2-r1)_{r2-r1} / (i-1)_{r2}, paired factor by factor
        double p = 1.0;
        for (int t = 0; t < pol.r1; ++t)
            p *= static_cast<double>(pol.s1 - t) / static_cast<double>(i - 1 - t);
        for (int t = pol.r1; t < pol.r2; ++t)
            p *= static_cast<double>(pol.s2 - t) / static_cast<double>(i - 1 - t);
        return WinProbability::approx(p);
    }
    return WinProbability::exact(
        Rational(falling_factorial(pol.s1, pol.r1) *
                     falling_factorial(pol.s2 - pol.r1, pol.r2 - pol.r1),
                 falling_factorial(i - 1, pol.r2)));
}

WinProbability dlp_win_prob(const ProblemInstance& inst, const DoubleLevelPolicy& pol,
                            NumericMode mode) {
    inst.validate();
    pol.validate(inst);
    if (mode == NumericMode::float64)
        return WinProbability::approx(
            detail::dlp_value<double>(inst.n, inst.b, pol.s1, pol.s2, pol.r1, pol.r2));
    return WinProbability::exact(
        detail::dlp_value<Rational>(inst.n, inst.b, pol.s1, pol.s2, pol.r1, pol.r2));
}

}  // namespace secretary::exactprob
