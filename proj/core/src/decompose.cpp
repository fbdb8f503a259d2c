#include "shapeparts/decompose.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace shapeparts {

std::vector<Seed> regional_minima(const ScalarField& field, const RegionMask& region) {
  require_same_domain(*field.domain(), *region.domain());
  if (region.empty()) throw Error(ErrorCode::EmptyRegion, "regional minima of an empty region");
  const auto& domain = *field.domain();

  std::vector<std::uint8_t> visited(region.size(), 0);
  std::vector<std::size_t> stack;
  std::vector<Seed> seeds;
  for (std::size_t start = 0; start < region.size(); ++start) {
    if (!region.contains(start) || visited[start]) continue;
    const double level = field[start];
    Seed plateau{.pixels = {}, .value = level, .representative = start};
    bool is_minimum = true;
    visited[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      plateau.pixels.push_back(k);
      for (const auto nb : domain.neighbors(k)) {
        if (nb == DomainGrid::kNone) continue;
        const auto q = static_cast<std::size_t>(nb);
        if (!region.contains(q)) continue;
        if (field[q] < level) {
          is_minimum = false;
        } else if (field[q] == level && !visited[q]) {
          visited[q] = 1;
          stack.push_back(q);
        }
      }
    }
    if (is_minimum) {
      std::sort(plateau.pixels.begin(), plateau.pixels.end());
      seeds.push_back(std::move(plateau));
    }
  }
  return seeds;
}

Labeling watershed(const ScalarField& field, const RegionMask& region, std::span<const Seed> seeds) {
  require_same_domain(*field.domain(), *region.domain());
  if (region.empty()) throw Error(ErrorCode::EmptyRegion, "watershed on an empty region");
  if (seeds.empty()) throw Error(ErrorCode::InvalidArgument, "watershed needs at least one seed");
  const auto& domain = *field.domain();

  struct Entry {
    double level;
    double seed_level;
    std::uint64_t order;
    std::size_t pixel;
  };
  const auto later = [](const Entry& a, const Entry& b) {
    if (a.level != b.level) return a.level > b.level;
    if (a.seed_level != b.seed_level) return a.seed_level > b.seed_level;
    return a.order > b.order;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> open(later);

  Labeling out;
  out.labels.assign(region.size(), 0);
  out.count = seeds.size();
  std::vector<double> seed_level(seeds.size() + 1, 0.0);
  std::uint64_t order = 0;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const auto label = static_cast<std::int32_t>(s + 1);
    seed_level[s + 1] = seeds[s].value;
    for (const auto k : seeds[s].pixels) {
      if (k >= region.size() || !region.contains(k)) {
        throw Error(ErrorCode::InvalidArgument, "seed pixel outside the flooded region");
      }
      if (out.labels[k] != 0) throw Error(ErrorCode::InvalidArgument, "overlapping seeds");
      out.labels[k] = label;
      open.push({field[k], seeds[s].value, order++, k});
    }
  }

  while (!open.empty()) {
    const auto e = open.top();
    open.pop();
    const auto label = out.labels[e.pixel];
    for (const auto nb : domain.neighbors(e.pixel)) {
      if (nb == DomainGrid::kNone) continue;
      const auto q = static_cast<std::size_t>(nb);
      if (!region.contains(q) || out.labels[q] != 0) continue;
      out.labels[q] = label;
      open.push({std::max(field[q], e.level), seed_level[static_cast<std::size_t>(label)], order++, q});
    }
  }
  return out;
}

std::size_t Decomposition::peripheral_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      parts.begin(), parts.end(), [](const PartRecord& p) { return p.sign_class == SignClass::Peripheral; }));
}

std::size_t Decomposition::gross_count() const noexcept { return parts.size() - peripheral_count(); }

DecomposeResult decompose(OmegaResult omega) {
  const auto& domain = omega.domain;
  const auto& w = omega.omega;
  Decomposition dec{.domain = domain, .labels = std::vector<std::int32_t>(domain->omega_size(), 0), .parts = {}};

  std::vector<Seed> seeds;
  const bool no_peripheral = omega.negative.empty();
  if (!no_peripheral) {
    seeds = regional_minima(w, omega.negative);
    const auto flood = watershed(w, omega.negative, seeds);
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      dec.parts.push_back(PartRecord{.label = static_cast<std::int32_t>(s + 1),
                                     .sign_class = SignClass::Peripheral,
                                     .seed_pixel = domain->pixel(seeds[s].representative),
                                     .area = 0,
                                     .min_omega = std::numeric_limits<double>::infinity(),
                                     .saliency = std::nullopt});
    }
    dec.labels = flood.labels;
  }

  const auto first_gross = static_cast<std::int32_t>(dec.parts.size() + 1);
  const auto gross = connected_components(omega.gross_region());
  for (std::size_t g = 0; g < gross.count; ++g) {
    dec.parts.push_back(PartRecord{.label = first_gross + static_cast<std::int32_t>(g),
                                   .sign_class = SignClass::Gross,
                                   .seed_pixel = {},
                                   .area = 0,
                                   .min_omega = std::numeric_limits<double>::infinity(),
                                   .saliency = std::nullopt});
  }
  std::vector<std::uint8_t> has_seed(gross.count, 0);
  for (std::size_t k = 0; k < gross.component.size(); ++k) {
    const auto id = gross.component[k];
    if (id == DomainGrid::kNone) continue;
    auto& part = dec.parts[static_cast<std::size_t>(first_gross - 1 + id)];
    if (!has_seed[static_cast<std::size_t>(id)]) {
      has_seed[static_cast<std::size_t>(id)] = 1;
      part.seed_pixel = domain->pixel(k);
    }
    dec.labels[k] = part.label;
  }
  for (std::size_t k = 0; k < dec.labels.size(); ++k) {
    auto& part = dec.part(dec.labels[k]);
    ++part.area;
    part.min_omega = std::min(part.min_omega, w[k]);
  }
  return DecomposeResult{.omega = std::move(omega),
                         .decomposition = std::move(dec),
                         .seeds = std::move(seeds),
                         .no_peripheral = no_peripheral};
}

DecomposeResult decompose_shape(const BinaryMask& mask, double global_weight, const SolverConfig& config) {
  return decompose(compute_omega(mask, global_weight, config));
}

}  // namespace shapeparts
