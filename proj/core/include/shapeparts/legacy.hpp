#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "shapeparts/linsys.hpp"

namespace shapeparts {

enum class LegacyKind {
  TspV,              // (4 + a) v - sum(nbrs) = a
  Poisson,           // 4 u - sum(nbrs) = 1
  ScreenedDistance,  // (4 + a) w - sum(nbrs) = (a + 2) t
};

struct LegacyFieldKind {
  LegacyKind kind = LegacyKind::TspV;
  double alpha = 0.0;  // must be > 0 except for Poisson
};

std::string_view to_string(LegacyKind kind) noexcept;
LegacyKind parse_legacy_kind(std::string_view name);

SolveResult compute_legacy_field(const DomainPtr& domain, const LegacyFieldKind& kind,
                                 const SolverConfig& config = {});
SolveResult compute_legacy_field(const BinaryMask& mask, const LegacyFieldKind& kind,
                                 const SolverConfig& config = {});

/// Per level l: interior pixels with value >= l that have a 4-neighbour
/// below l (boundary pixels count as 0). Levels outside (min, max] give
/// an empty mask.
std::vector<RegionMask> level_curves(const ScalarField& field, std::span<const double> levels);

/// Relative dip of |grad v| at each pixel: 1 - |g| / m, where m is the mean
/// of |g| sampled bilinearly one pixel either way along the level curve, plus
/// the same taken across it. Each term is clamped at 0, so strength lies in
/// [0, 2]; pixels with vanishing gradient get 0. Corners of level curves show
/// up in the first term, ridges of v in the second. An approximation of
/// gradient extrema along level curves.
ScalarField skeleton_strength(const ScalarField& v);

inline constexpr double kDefaultSkeletonFraction = 0.5;
RegionMask skeleton_mask(const ScalarField& strength, double threshold_fraction = kDefaultSkeletonFraction);

}  // namespace shapeparts
