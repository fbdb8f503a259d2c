#pragma once

#include <span>
#include <vector>

#include "shapeparts/distance.hpp"
#include "shapeparts/linsys.hpp"

namespace shapeparts {

struct OmegaParams {
  /// Weight c of the global coupling term; 1 is the parameter-free method.
  double global_weight = 1.0;
  /// Multiplier on the distance right-hand side. 1 solves
  /// 4w - sum(nbrs) + (c/|Omega|) sum(w) = t; 2 gives the unnormalised
  /// boundary-weight form with right-hand side 2t. Sign sets do not depend on it.
  double rhs_scale = 1.0;
};

/// Relative width of the band around 0 classified as zero pixels.
inline constexpr double kSignEpsilonFactor = 1e-9;

struct OmegaResult {
  DomainPtr domain;
  ScalarField omega;
  DistanceField distance;
  OmegaParams params;
  RegionMask positive;  // w > eps
  RegionMask negative;  // w < -eps
  RegionMask zero;      // |w| <= eps
  double global_sum = 0.0;
  double sign_epsilon = 0.0;
  SolveReport report;

  /// Positive and zero pixels together; the side gross parts are cut from.
  RegionMask gross_region() const { return positive | zero; }
};

OmegaResult compute_omega(const BinaryMask& mask, double global_weight = 1.0,
                          const SolverConfig& config = {});
OmegaResult compute_omega(const DomainPtr& domain, const OmegaParams& params,
                          const SolverConfig& config = {});

RegionMask sublevel_mask(const OmegaResult& result, double tau);
std::vector<RegionMask> sublevel_masks(const OmegaResult& result, std::span<const double> taus);

}  // namespace shapeparts
