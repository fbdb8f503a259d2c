#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shapeparts/field.hpp"
#include "shapeparts/omega.hpp"

namespace shapeparts {

/// One regional minimum: a maximal 4-connected plateau with no strictly
/// lower neighbour inside the region.
struct Seed {
  std::vector<std::size_t> pixels;  // interior indices, ascending
  double value = 0.0;
  std::size_t representative = 0;  // first pixel in row-major order
};

/// Seeds are returned in row-major order of their representatives.
std::vector<Seed> regional_minima(const ScalarField& field, const RegionMask& region);

struct Labeling {
  /// 0 outside the region, otherwise 1 + index of the flooding seed.
  std::vector<std::int32_t> labels;
  std::size_t count = 0;
};

/// Priority-flood watershed restricted to `region`. Every region pixel gets
/// the label of the first front that reaches it; ties in level go to the
/// front with the lower minimum, then to the earlier queue insertion.
Labeling watershed(const ScalarField& field, const RegionMask& region, std::span<const Seed> seeds);

enum class SignClass { Peripheral, Gross };

struct PartRecord {
  std::int32_t label = 0;
  SignClass sign_class = SignClass::Gross;
  Pixel seed_pixel;
  std::size_t area = 0;
  double min_omega = 0.0;
  std::optional<double> saliency;
};

struct Decomposition {
  DomainPtr domain;
  /// Part label per interior unknown. Peripheral parts take 1..P, gross parts P+1..P+G.
  std::vector<std::int32_t> labels;
  std::vector<PartRecord> parts;

  std::size_t peripheral_count() const noexcept;
  std::size_t gross_count() const noexcept;
  const PartRecord& part(std::int32_t label) const { return parts.at(static_cast<std::size_t>(label - 1)); }
  PartRecord& part(std::int32_t label) { return parts.at(static_cast<std::size_t>(label - 1)); }
};

struct DecomposeResult {
  OmegaResult omega;
  Decomposition decomposition;
  std::vector<Seed> seeds;  // peripheral seeds, aligned with labels 1..P
  /// Set when the negative region is empty and only gross parts exist.
  bool no_peripheral = false;
};

DecomposeResult decompose(OmegaResult omega);
DecomposeResult decompose_shape(const BinaryMask& mask, double global_weight = 1.0,
                                const SolverConfig& config = {});

}  // namespace shapeparts
