#pragma once

#include <cmath>

namespace gbkop {

/// Neumaier-compensated accumulator. Series here need absolute accuracy near
/// 1e-12 on sums of thousands of terms, which plain summation does not give.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace gbkop
