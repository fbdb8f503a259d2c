#pragma once

#include <cmath>
#include <span>

namespace shapeparts::detail {

/// Neumaier compensated sum in a fixed left-to-right order.
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

inline double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum s;
  for (const double v : values) s.add(v);
  return s.value();
}

inline double compensated_dot(std::span<const double> a, std::span<const double> b) noexcept {
  CompensatedSum s;
  for (std::size_t k = 0; k < a.size(); ++k) s.add(a[k] * b[k]);
  return s.value();
}

}  // namespace shapeparts::detail
