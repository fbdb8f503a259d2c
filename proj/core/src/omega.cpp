#include "shapeparts/omega.hpp"

#include <cmath>

#include "summation.hpp"

namespace shapeparts {

OmegaResult compute_omega(const BinaryMask& mask, double global_weight, const SolverConfig& config) {
  return compute_omega(build_domain(mask), OmegaParams{.global_weight = global_weight}, config);
}

OmegaResult compute_omega(const DomainPtr& domain, const OmegaParams& params, const SolverConfig& config) {
  if (!(params.global_weight >= 0.0) || !std::isfinite(params.global_weight)) {
    throw Error(ErrorCode::InvalidArgument, "global weight c must be finite and nonnegative");
  }
  if (!(params.rhs_scale > 0.0) || !std::isfinite(params.rhs_scale)) {
    throw Error(ErrorCode::InvalidArgument, "rhs scale must be finite and positive");
  }
  auto distance = distance_transform(domain);
  ScalarField rhs = distance.field();
  for (auto& v : rhs.values()) v *= params.rhs_scale;

  auto solved = solve_cg(OperatorParams{.global_weight = params.global_weight, .screening = 0.0}, rhs, config);
  const auto& w = solved.solution;
  const double eps = kSignEpsilonFactor * w.max_abs();

  const auto n = w.size();
  std::vector<std::uint8_t> pos(n), neg(n), zero(n);
  for (std::size_t k = 0; k < n; ++k) {
    pos[k] = w[k] > eps;
    neg[k] = w[k] < -eps;
    zero[k] = !pos[k] && !neg[k];
  }
  const double sum = detail::compensated_sum(w.values());
  return OmegaResult{
      .domain = domain,
      .omega = std::move(solved.solution),
      .distance = std::move(distance),
      .params = params,
      .positive = RegionMask(domain, std::move(pos)),
      .negative = RegionMask(domain, std::move(neg)),
      .zero = RegionMask(domain, std::move(zero)),
      .global_sum = sum,
      .sign_epsilon = eps,
      .report = std::move(solved.report),
  };
}

RegionMask sublevel_mask(const OmegaResult& result, double tau) { return sublevel_mask(result.omega, tau); }

std::vector<RegionMask> sublevel_masks(const OmegaResult& result, std::span<const double> taus) {
  std::vector<RegionMask> out;
  out.reserve(taus.size());
  for (const double tau : taus) out.push_back(sublevel_mask(result.omega, tau));
  return out;
}

}  // namespace shapeparts
