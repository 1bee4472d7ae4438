#pragma once

namespace vnge {

/// Kahan compensated accumulator. The quadratic-form sums behind the
/// entropy surrogates subtract values near 1, so plain summation of many
/// small squares loses the digits the comparisons need.
class KahanSum {
public:
    void add(double x) {
        double y = x - compensation_;
        double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace vnge
