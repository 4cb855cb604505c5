#pragma once

namespace nucleus::detail {

// Compensated summation; keeps long sums of near-equal terms accurate to a
// few ulps independent of length.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace nucleus::detail
