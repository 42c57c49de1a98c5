#include <secretary/types.hpp>

#include <sstream>
#include <stdexcept>

namespace secretary {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::domain_error(what); }

}  // namespace

void ProblemInstance::validate() const {
    if (n < 1) {
        std::ostringstream os;
        os << "ProblemInstance: requires n >= 1 (got n=" << n << ")";
        fail(os.str());
    }
    if (b < 1 || b > n) {
        std::ostringstream os;
        os << "ProblemInstance: requires 1 <= b <= n (got b=" << b << ", n=" << n << ")";
        fail(os.str());
    }
}

void SingleLevelPolicy::validate(const ProblemInstance& inst) const {
    inst.validate();
    if (s < 0 || s > inst.n - 1) {
        std::ostringstream os;
        os << "SingleLevelPolicy: requires 0 <= s <= n-1 (got s=" << s << ", n=" << inst.n << ")";
        fail(os.str());
    }
    if (r < 1 || r > inst.b) {
        std::ostringstream os;
        os << "SingleLevelPolicy: requires 1 <= r <= b (got r=" << r << ", b=" << inst.b << ")";
        fail(os.str());
    }
}

void DoubleLevelPolicy::validate(const ProblemInstance& inst) const {
    inst.validate();
    if (!(1 <= r1 && r1 < r2 && r2 <= inst.b)) {
        std::ostringstream os;
        os << "DoubleLevelPolicy: requires 1 <= r1 < r2 <= b (got r1=" << r1 << ", r2=" << r2
           << ", b=" << inst.b << ")";
        fail(os.str());
    }
    if (!(r1 <= s1 && s1 < s2 && s2 <= inst.n - 1)) {
        std::ostringstream os;
        os << "DoubleLevelPolicy: requires r1 <= s1 < s2 <= n-1 (got s1=" << s1 << ", s2=" << s2
           << ", r1=" << r1 << ", n=" << inst.n << ")";
        fail(os.str());
    }
}

void MultiLevelPolicy::validate(const ProblemInstance& inst) const {
    inst.validate();
    if (static_cast<int>(thresholds.size()) != inst.b) {
        std::ostringstream os;
        os << "MultiLevelPolicy: requires exactly b thresholds (got " << thresholds.size()
           << ", b=" << inst.b << ")";
        fail(os.str());
    }
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
        if (thresholds[j] < 0 || thresholds[j] > inst.n - 1) {
            std::ostringstream os;
            os << "MultiLevelPolicy: requires 0 <= s_j <= n-1 (got s_" << (j + 1) << "="
               << thresholds[j] << ", n=" << inst.n << ")";
            fail(os.str());
        }
        if (j > 0 && thresholds[j] < thresholds[j - 1]) {
            std::ostringstream os;
            os << "MultiLevelPolicy: requires non-decreasing thresholds (got s_" << j << "="
               << thresholds[j - 1] << " > s_" << (j + 1) << "=" << thresholds[j] << ")";
            fail(os.str());
        }
    }
}

void validate_policy(const Policy& policy, const ProblemInstance& inst) {
    std::visit([&](const auto& p) { p.validate(inst); }, policy);
}

int policy_level_at(const Policy& policy, int i) {
    return std::visit([&](const auto& p) { return p.level_at(i); }, policy);
}

WinProbability WinProbability::exact(Rational v) {
    if (v < 0 || v > 1) throw std::logic_error("WinProbability: exact value outside [0, 1]");
    WinProbability p;
    p.mode_ = NumericMode::exact_rational;
    p.float_ = to_double(v);
    p.rational_ = std::move(v);
    return p;
}

WinProbability WinProbability::approx(double v) {
    // tolerate last-ulp drift from float accumulation, reject anything larger
    constexpr double kSnap = 1e-9;
    if (v < -kSnap || v > 1.0 + kSnap)
        throw std::logic_error("WinProbability: float value outside [0, 1]");
    WinProbability p;
    p.mode_ = NumericMode::float64;
    p.float_ = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    return p;
}

const Rational& WinProbability::rational() const {
    if (mode_ != NumericMode::exact_rational)
        throw std::logic_error("WinProbability: rational() requires exact mode");
    return rational_;
}

}  // namespace secretary
