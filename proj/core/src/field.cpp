#include "shapeparts/field.hpp"

#include <algorithm>
#include <cmath>

#include "shapeparts/error.hpp"

namespace shapeparts {

ScalarField::ScalarField(DomainPtr domain) : domain_(std::move(domain)) {
  if (!domain_) throw Error(ErrorCode::InvalidArgument, "field without domain");
  values_.assign(domain_->omega_size(), 0.0);
}

ScalarField::ScalarField(DomainPtr domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_) throw Error(ErrorCode::InvalidArgument, "field without domain");
  if (values_.size() != domain_->omega_size()) {
    throw Error(ErrorCode::DomainMismatch, "field size does not match the interior size");
  }
}

double ScalarField::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

double ScalarField::max_abs() const noexcept {
  double m = 0.0;
  for (const double v : values_) m = std::max(m, std::abs(v));
  return m;
}

RegionMask sublevel_mask(const ScalarField& field, double tau) {
  std::vector<std::uint8_t> member(field.size());
  for (std::size_t k = 0; k < field.size(); ++k) member[k] = field[k] < tau ? 1 : 0;
  return RegionMask(field.domain(), std::move(member));
}

}  // namespace shapeparts
