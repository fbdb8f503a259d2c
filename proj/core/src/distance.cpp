#include "shapeparts/distance.hpp"

#include <cmath>

#include "shapeparts/error.hpp"

namespace shapeparts {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  auto q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

DistanceField::DistanceField(DomainPtr domain, std::vector<std::int64_t> squared)
    : squared_(std::move(squared)), field_(std::move(domain)) {
  if (squared_.size() != field_.size()) {
    throw Error(ErrorCode::DomainMismatch, "distance size does not match the interior size");
  }
  for (std::size_t k = 0; k < squared_.size(); ++k) field_[k] = std::sqrt(static_cast<double>(squared_[k]));
}

// Meijster, Roerdink and Hesselink: a column pass producing the 1D distance
// to the nearest site, then a row pass taking the lower envelope of the
// parabolas (x - i)^2 + g(i)^2. Everything stays in integers.
std::vector<std::int64_t> squared_distance_to_sites(int width, int height,
                                                    std::span<const std::uint8_t> sites) {
  if (width < 1 || height < 1 ||
      sites.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::InvalidArgument, "site raster does not match dimensions");
  }
  const std::int64_t inf = static_cast<std::int64_t>(width) + height;
  const auto at = [width](int r, int c) { return static_cast<std::size_t>(r) * width + c; };

  std::vector<std::int64_t> g(sites.size());
  for (int c = 0; c < width; ++c) {
    g[at(0, c)] = sites[at(0, c)] ? 0 : inf;
    for (int r = 1; r < height; ++r) g[at(r, c)] = sites[at(r, c)] ? 0 : 1 + g[at(r - 1, c)];
    for (int r = height - 2; r >= 0; --r) {
      if (g[at(r + 1, c)] < g[at(r, c)]) g[at(r, c)] = 1 + g[at(r + 1, c)];
    }
  }

  std::vector<std::int64_t> out(sites.size());
  std::vector<std::int64_t> s(static_cast<std::size_t>(width));
  std::vector<std::int64_t> t(static_cast<std::size_t>(width));
  for (int r = 0; r < height; ++r) {
    const std::int64_t* row = &g[at(r, 0)];
    const auto f = [row](std::int64_t x, std::int64_t i) { return (x - i) * (x - i) + row[i] * row[i]; };
    const auto sep = [row](std::int64_t i, std::int64_t u) {
      return floor_div(u * u - i * i + row[u] * row[u] - row[i] * row[i], 2 * (u - i));
    };
    std::int64_t q = 0;
    s[0] = 0;
    t[0] = 0;
    for (std::int64_t u = 1; u < width; ++u) {
      while (q >= 0 && f(t[q], s[q]) > f(t[q], u)) --q;
      if (q < 0) {
        q = 0;
        s[0] = u;
      } else {
        const auto w = 1 + sep(s[q], u);
        if (w < width) {
          ++q;
          s[q] = u;
          t[q] = w;
        }
      }
    }
    for (std::int64_t u = width - 1; u >= 0; --u) {
      out[at(r, static_cast<int>(u))] = f(u, s[q]);
      if (u == t[q]) --q;
    }
  }
  return out;
}

DistanceField distance_transform(const DomainPtr& domain) {
  if (domain->omega_size() == 0) throw Error(ErrorCode::NoInterior, "domain has no interior pixel");
  const int w = domain->width();
  const int h = domain->height();
  std::vector<std::uint8_t> sites(static_cast<std::size_t>(w) * h, 0);
  for (const auto p : domain->boundary_pixels()) sites[static_cast<std::size_t>(p.row) * w + p.col] = 1;
  const auto full = squared_distance_to_sites(w, h, sites);
  std::vector<std::int64_t> squared(domain->omega_size());
  for (std::size_t k = 0; k < squared.size(); ++k) {
    const auto p = domain->pixel(k);
    squared[k] = full[static_cast<std::size_t>(p.row) * w + p.col];
  }
  return DistanceField(domain, std::move(squared));
}

}  // namespace shapeparts
