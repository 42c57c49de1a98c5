#include <secretary/dp.hpp>

#include <secretary/combinatorics.hpp>
#include <secretary/rational.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "kernels.hpp"

namespace secretary::dp {

namespace {

double stop_point_float(int n, int b, int i, int k) {
    if (k > b) return 0.0;  // the sum over j in [k, b] is empty
    // term at j = k is C(i-1,k-1)/C(n-1,k-1); later terms follow the ratio of
    // consecutive hypergeometric numerators
    double t = 1.0;
    for (int m = 1; m <= k - 1; ++m)
        t *= static_cast<double>(i - m) / static_cast<double>(n - m);
    double sum = t;
    for (int j = k; j < b; ++j) {
        t *= (static_cast<double>(n - i - j + k) / static_cast<double>(j + 1 - k)) *
             (static_cast<double>(j) / static_cast<double>(n - j));
        if (t <= 0.0) break;  // C(n-i, j-k) left its support; later j vanish too
        sum += t;
    }
    return sum * static_cast<double>(i) / static_cast<double>(n);
}

// deciding stop vs continue at a tie must come out "stop"; in float mode the
// two sides carry rounding noise, so values within 1e-12 relative are treated
// as the tie they would be in exact arithmetic
bool strictly_less(double a, double b) { return a < b - 1e-12 * std::abs(b); }
bool strictly_less(const Rational& a, const Rational& b) { return a < b; }

template <class Num>
struct StopRowSource;

template <>
struct StopRowSource<double> {
    int n, b;
    StopRowSource(int n_, int b_) : n(n_), b(b_) {}
    void fill(int i, int kmax, std::vector<double>& q) const {
        detail::stop_row_float(n, b, i, kmax, q);
    }
};

template <>
struct StopRowSource<Rational> {
    detail::ExactStopRows rows;
    StopRowSource(int n_, int b_) : rows(n_, b_) {}
    void fill(int i, int kmax, std::vector<Rational>& q) const { rows.fill(i, kmax, q); }
};

template <class Num>
SlpDpResult slp_dp_impl(int n, int b, int r) {
    SlpDpResult out;
    out.accept_value.assign(static_cast<std::size_t>(std::max(n, 1)), 0.0);
    out.continue_value.assign(static_cast<std::size_t>(std::max(n, 1)), 0.0);
    out.continue_action.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
    int s_star = 0;
    if (n >= 2) {
        const StopRowSource<Num> source(n, b);
        std::vector<Num> q(static_cast<std::size_t>(std::min(r, n) + 1), Num(0));
        // f1[i]: value in state (position i, Y_i <= r); f2[i]: value of skipping i
        std::vector<Num> f1(static_cast<std::size_t>(n), Num(0));
        std::vector<Num> f2(static_cast<std::size_t>(n), Num(0));
        for (int i = n - 1; i >= 1; --i) {
            const int kmax = std::min(r, i);
            source.fill(i, kmax, q);
            Num stop(0);
            for (int k = 1; k <= kmax; ++k) stop += q[static_cast<std::size_t>(k)];
            stop *= detail::ratio_of<Num>(1, kmax);
            Num cont;
            if (i == n - 1) {
                cont = detail::ratio_of<Num>(b, n);  // forced acceptance at n
            } else {
                // the next position shows Y <= r with probability min(r,i+1)/(i+1)
                const Num p_le = detail::ratio_of<Num>(std::min(r, i + 1), i + 1);
                cont = p_le * f1[static_cast<std::size_t>(i + 1)] +
                       (Num(1) - p_le) * f2[static_cast<std::size_t>(i + 1)];
            }
            f2[static_cast<std::size_t>(i)] = cont;
            f1[static_cast<std::size_t>(i)] = std::max(stop, cont);
            const bool continue_better = strictly_less(stop, cont);  // ties stop
            out.continue_action[static_cast<std::size_t>(i)] = continue_better ? 1 : 0;
            if (continue_better && s_star < i) s_star = i;
            out.accept_value[static_cast<std::size_t>(i)] = detail::to_float(stop);
            out.continue_value[static_cast<std::size_t>(i)] = detail::to_float(cont);
        }
    }
    out.s_star = s_star;
    out.value = detail::wrap(detail::slp_value<Num>(n, b, s_star, r));
    return out;
}

template <class Num>
OptimalPolicyResult optimal_policy_dp_impl(int n, int b) {
    OptimalPolicyResult out;
    std::vector<int> thresholds(static_cast<std::size_t>(b), 0);
    if (n == 1) {
        // the single candidate is accepted and always wins (b = n = 1)
        out.policy = MultiLevelPolicy{thresholds};
        out.value = detail::wrap(Num(1));
        out.continue_value.assign(1, 1.0);
        return out;
    }
    const StopRowSource<Num> source(n, b);
    std::vector<Num> q(static_cast<std::size_t>(std::min(b, n) + 1), Num(0));
    // c[i] = expected value of passing position i; c[0] ends up as the value
    // of the whole problem (position 1 always shows relative rank 1)
    std::vector<Num> c(static_cast<std::size_t>(n), Num(0));
    c[static_cast<std::size_t>(n - 1)] = detail::ratio_of<Num>(b, n);
    std::vector<int> last_continue(static_cast<std::size_t>(b + 1), 0);
    for (int i = n - 1; i >= 1; --i) {
        const int kmax = std::min(i, b);
        source.fill(i, kmax, q);
        const Num& ci = c[static_cast<std::size_t>(i)];
        for (int j = 1; j <= kmax; ++j)
            if (last_continue[static_cast<std::size_t>(j)] == 0 &&
                strictly_less(q[static_cast<std::size_t>(j)], ci))
                last_continue[static_cast<std::size_t>(j)] = i;  // ties stop
        Num acc(0);
        for (int k = 1; k <= kmax; ++k) acc += std::max(q[static_cast<std::size_t>(k)], ci);
        if (i > b) acc += Num(i - b) * ci;
        c[static_cast<std::size_t>(i - 1)] = acc * detail::ratio_of<Num>(1, i);
    }
    for (int j = 1; j <= b; ++j)
        thresholds[static_cast<std::size_t>(j - 1)] =
            std::max(last_continue[static_cast<std::size_t>(j)], j - 1);
    out.policy = MultiLevelPolicy{thresholds};
    out.value = detail::wrap(c[0]);
    out.continue_value.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.continue_value[static_cast<std::size_t>(i)] =
            detail::to_float(c[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

WinProbability stop_success_prob(int i, int k, const ProblemInstance& inst, NumericMode mode) {
    inst.validate();
    if (k < 1 || k > i || i > inst.n) {
        std::ostringstream os;
        os << "stop_success_prob: requires 1 <= k <= i <= n (got i=" << i << ", k=" << k
           << ", n=" << inst.n << ")";
        throw std::domain_error(os.str());
    }
    if (mode == NumericMode::float64)
        return WinProbability::approx(stop_point_float(inst.n, inst.b, i, k));
    Rational p(0);
    for (int j = k; j <= inst.b; ++j) {
        if (j - k > inst.n - i) break;
        p += hypergeometric_rank_pmf_exact(inst.n, i, j, k);
    }
    p *= Rational(i, inst.n);
    return WinProbability::exact(p);
}

SlpDpResult slp_dp(const ProblemInstance& inst, int r, NumericMode mode) {
    inst.validate();
    if (r < 1 || r > inst.b) {
        std::ostringstream os;
        os << "slp_dp: requires 1 <= r <= b (got r=" << r << ", b=" << inst.b << ")";
        throw std::domain_error(os.str());
    }
    return mode == NumericMode::float64 ? slp_dp_impl<double>(inst.n, inst.b, r)
                                        : slp_dp_impl<Rational>(inst.n, inst.b, r);
}

OptimalPolicyResult optimal_policy_dp(const ProblemInstance& inst, NumericMode mode) {
    inst.validate();
    OptimalPolicyResult out = mode == NumericMode::float64
                                  ? optimal_policy_dp_impl<double>(inst.n, inst.b)
                                  : optimal_policy_dp_impl<Rational>(inst.n, inst.b);
    out.policy.validate(inst);  // recovered thresholds must be non-decreasing
    return out;
}

}  // namespace secretary::dp
