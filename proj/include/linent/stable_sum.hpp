#pragma once

#include <cmath>

namespace linent {

/// Compensated accumulator (Neumaier's variant of Kahan summation).
///
/// Tracks the rounding error of each addition in a separate term and folds
/// it back in when the value is read, so a sum of n doubles carries an error
/// independent of n instead of growing with it.
class StableSum {
 public:
  StableSum() = default;
  explicit StableSum(double init) : sum_(init) {}

  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace linent
