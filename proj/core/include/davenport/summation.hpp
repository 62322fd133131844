#pragma once

#include <cmath>

namespace davenport {

/// Neumaier-compensated accumulator. Every summation in this library runs
/// through a fixed, documented term order, so results are bit-reproducible
/// across runs and worker counts.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace davenport
