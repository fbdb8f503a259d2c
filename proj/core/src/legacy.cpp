#include "shapeparts/legacy.hpp"

#include <cmath>
#include <string>

namespace shapeparts {

std::string_view to_string(LegacyKind kind) noexcept {
  switch (kind) {
    case LegacyKind::TspV: return "tsp_v";
    case LegacyKind::Poisson: return "poisson";
    case LegacyKind::ScreenedDistance: return "screened_distance";
  }
  return "unknown";
}

LegacyKind parse_legacy_kind(std::string_view name) {
  if (name == "tsp_v") return LegacyKind::TspV;
  if (name == "poisson") return LegacyKind::Poisson;
  if (name == "screened_distance") return LegacyKind::ScreenedDistance;
  throw Error(ErrorCode::InvalidArgument, "unknown field kind '" + std::string(name) + "'");
}

SolveResult compute_legacy_field(const DomainPtr& domain, const LegacyFieldKind& kind, const SolverConfig& config) {
  const bool needs_alpha = kind.kind != LegacyKind::Poisson;
  if (needs_alpha && !(kind.alpha > 0.0 && std::isfinite(kind.alpha))) {
    throw Error(ErrorCode::BadAlpha, "alpha must be finite and > 0 for " + std::string(to_string(kind.kind)));
  }
  ScalarField rhs(domain);
  OperatorParams params{.global_weight = 0.0, .screening = needs_alpha ? kind.alpha : 0.0};
  switch (kind.kind) {
    case LegacyKind::TspV:
      for (auto& v : rhs.values()) v = kind.alpha;
      break;
    case LegacyKind::Poisson:
      for (auto& v : rhs.values()) v = 1.0;
      break;
    case LegacyKind::ScreenedDistance: {
      const auto t = distance_transform(domain);
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = (kind.alpha + 2.0) * t[k];
      break;
    }
  }
  return solve_cg(params, rhs, config);
}

SolveResult compute_legacy_field(const BinaryMask& mask, const LegacyFieldKind& kind, const SolverConfig& config) {
  return compute_legacy_field(build_domain(mask), kind, config);
}

std::vector<RegionMask> level_curves(const ScalarField& field, std::span<const double> levels) {
  const auto& domain = *field.domain();
  const double lo = field.min();
  const double hi = field.max();
  std::vector<RegionMask> out;
  out.reserve(levels.size());
  for (const double level : levels) {
    std::vector<std::uint8_t> member(field.size(), 0);
    if (level > lo && level <= hi) {
      for (std::size_t k = 0; k < field.size(); ++k) {
        if (field[k] < level) continue;
        const auto p = domain.pixel(k);
        const bool edge = field.at(p.row - 1, p.col) < level || field.at(p.row + 1, p.col) < level ||
                          field.at(p.row, p.col - 1) < level || field.at(p.row, p.col + 1) < level;
        member[k] = edge ? 1 : 0;
      }
    }
    out.emplace_back(field.domain(), std::move(member));
  }
  return out;
}

namespace {

struct GradientGrid {
  int width;
  int height;
  std::vector<double> magnitude;
  std::vector<double> gx;
  std::vector<double> gy;

  double sample(double row, double col) const noexcept {
    const int r0 = static_cast<int>(std::floor(row));
    const int c0 = static_cast<int>(std::floor(col));
    const double fr = row - r0;
    const double fc = col - c0;
    const auto get = [this](int r, int c) {
      if (r < 0 || c < 0 || r >= height || c >= width) return 0.0;
      return magnitude[static_cast<std::size_t>(r) * width + c];
    };
    return (1 - fr) * ((1 - fc) * get(r0, c0) + fc * get(r0, c0 + 1)) +
           fr * ((1 - fc) * get(r0 + 1, c0) + fc * get(r0 + 1, c0 + 1));
  }
};

GradientGrid central_gradient(const ScalarField& v) {
  const auto& domain = *v.domain();
  GradientGrid g{domain.width(), domain.height(), {}, {}, {}};
  const auto n = static_cast<std::size_t>(g.width) * g.height;
  g.magnitude.assign(n, 0.0);
  g.gx.assign(n, 0.0);
  g.gy.assign(n, 0.0);
  for (int r = 0; r < g.height; ++r) {
    for (int c = 0; c < g.width; ++c) {
      if (domain.kind(r, c) == PixelKind::Background) continue;
      const auto i = static_cast<std::size_t>(r) * g.width + c;
      g.gx[i] = 0.5 * (v.at(r, c + 1) - v.at(r, c - 1));
      g.gy[i] = 0.5 * (v.at(r + 1, c) - v.at(r - 1, c));
      g.magnitude[i] = std::hypot(g.gx[i], g.gy[i]);
    }
  }
  return g;
}

}  // namespace

ScalarField skeleton_strength(const ScalarField& v) {
  const auto& domain = *v.domain();
  const auto grad = central_gradient(v);
  double largest = 0.0;
  for (const double m : grad.magnitude) largest = std::max(largest, m);

  ScalarField strength(v.domain());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto p = domain.pixel(k);
    const auto i = static_cast<std::size_t>(p.row) * grad.width + p.col;
    const double mag = grad.magnitude[i];
    if (mag <= 1e-12 * largest) continue;
    const double tc = -grad.gy[i] / mag;
    const double tr = grad.gx[i] / mag;
    const double along = 0.5 * (grad.sample(p.row + tr, p.col + tc) + grad.sample(p.row - tr, p.col - tc));
    const double across = 0.5 * (grad.sample(p.row + tc, p.col - tr) + grad.sample(p.row - tc, p.col + tr));
    strength[k] = std::max(0.0, 1.0 - mag / along) + std::max(0.0, 1.0 - mag / across);
  }
  return strength;
}

RegionMask skeleton_mask(const ScalarField& strength, double threshold_fraction) {
  if (!(threshold_fraction >= 0.0 && threshold_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "threshold fraction must lie in [0, 1]");
  }
  const double cut = threshold_fraction * strength.max();
  std::vector<std::uint8_t> member(strength.size());
  for (std::size_t k = 0; k < strength.size(); ++k) member[k] = strength[k] > cut ? 1 : 0;
  return RegionMask(strength.domain(), std::move(member));
}

}  // namespace shapeparts
