#pragma once

#include <secretary/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <variant>
#include <vector>

namespace secretary {

enum class NumericMode { float64, exact_rational };

// (n, b): select one of the b best out of n candidates presented in uniformly
// random order. A run "wins" when the accepted candidate has absolute rank <= b.
struct ProblemInstance {
    int n = 1;
    int b = 1;

    void validate() const;  // throws std::domain_error naming the violated constraint
};

// Skip the first s candidates, then accept the first one whose relative rank
// is <= r; acceptance is forced at position n.
struct SingleLevelPolicy {
    int s = 0;
    int r = 1;

    void validate(const ProblemInstance& inst) const;
    // Worst acceptable relative rank at 1-based position i (0 = never accept).
    int level_at(int i) const { return i > s ? r : 0; }
};

// Two phases: accept relative rank <= r1 on positions (s1, s2], then relative
// rank <= r2 on (s2, n-1]; forced acceptance at position n.
struct DoubleLevelPolicy {
    int s1 = 1;
    int s2 = 2;
    int r1 = 1;
    int r2 = 2;

    void validate(const ProblemInstance& inst) const;
    int level_at(int i) const { return i <= s1 ? 0 : (i <= s2 ? r1 : r2); }
};

// Thresholds s_1 <= ... <= s_b; positions in (s_j, s_{j+1}] accept relative
// rank <= j, with the convention s_{b+1} = n-1 and forced acceptance at n.
struct MultiLevelPolicy {
    std::vector<int> thresholds;

    void validate(const ProblemInstance& inst) const;
    int level_at(int i) const {
        // number of thresholds strictly below position i
        auto it = std::lower_bound(thresholds.begin(), thresholds.end(), i);
        return static_cast<int>(it - thresholds.begin());
    }
};

using Policy = std::variant<SingleLevelPolicy, DoubleLevelPolicy, MultiLevelPolicy>;

void validate_policy(const Policy& policy, const ProblemInstance& inst);
int policy_level_at(const Policy& policy, int i);

// A probability carried either as an exact arbitrary-precision rational or as
// a double. Construction enforces [0, 1] (floats get a tiny rounding snap).
class WinProbability {
  public:
    WinProbability() = default;

    static WinProbability exact(Rational v);
    static WinProbability approx(double v);

    NumericMode mode() const { return mode_; }
    double value() const { return float_; }     // float image in both modes
    const Rational& rational() const;           // exact mode only; throws otherwise

  private:
    NumericMode mode_ = NumericMode::float64;
    Rational rational_{};
    double float_ = 0.0;
};

}  // namespace secretary
