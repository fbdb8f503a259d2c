#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shapeparts/field.hpp"

namespace shapeparts {

/// Grass-fire arrival time: Euclidean distance from each interior pixel to
/// the nearest boundary pixel.
class DistanceField {
 public:
  DistanceField(DomainPtr domain, std::vector<std::int64_t> squared);

  const DomainPtr& domain() const noexcept { return field_.domain(); }
  std::span<const std::int64_t> squared() const noexcept { return squared_; }
  const ScalarField& field() const noexcept { return field_; }
  double operator[](std::size_t k) const noexcept { return field_[k]; }

 private:
  std::vector<std::int64_t> squared_;
  ScalarField field_;
};

DistanceField distance_transform(const DomainPtr& domain);

/// Exact squared Euclidean distance from every raster cell to the nearest
/// site, row-major. Two separable passes over integer arithmetic. Requires
/// at least one site.
std::vector<std::int64_t> squared_distance_to_sites(int width, int height,
                                                    std::span<const std::uint8_t> sites);

}  // namespace shapeparts
