#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shapeparts/domain.hpp"

namespace shapeparts {

/// Real-valued function on the interior unknowns of a domain. Boundary,
/// background and off-image pixels read as exactly 0.
class ScalarField {
 public:
  explicit ScalarField(DomainPtr domain);
  ScalarField(DomainPtr domain, std::vector<double> values);

  const DomainPtr& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return values_.size(); }

  double operator[](std::size_t k) const noexcept { return values_[k]; }
  double& operator[](std::size_t k) noexcept { return values_[k]; }

  double at(int row, int col) const noexcept {
    const auto k = domain_->interior_index(row, col);
    return k == DomainGrid::kNone ? 0.0 : values_[static_cast<std::size_t>(k)];
  }
  double at(Pixel p) const noexcept { return at(p.row, p.col); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double min() const noexcept;
  double max() const noexcept;
  double max_abs() const noexcept;

 private:
  DomainPtr domain_;
  std::vector<double> values_;
};

/// Pixels of the field's domain whose value is strictly below `tau`.
RegionMask sublevel_mask(const ScalarField& field, double tau);

}  // namespace shapeparts
