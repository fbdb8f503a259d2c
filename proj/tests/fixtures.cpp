#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace shapeparts::fixtures {

namespace {

bool in_disk(double x, double y, double cx, double cy, double r) {
  return (x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r;
}

bool in_ellipse(double x, double y, double cx, double cy, double rx, double ry) {
  const double u = (x - cx) / rx;
  const double v = (y - cy) / ry;
  return u * u + v * v <= 1.0;
}

bool in_box(double x, double y, double x0, double y0, double x1, double y1) {
  return x >= x0 && x <= x1 && y >= y0 && y <= y1;
}

// Capsule of half-width r around the segment (ax, ay)-(bx, by).
bool in_capsule(double x, double y, double ax, double ay, double bx, double by, double r) {
  const double dx = bx - ax;
  const double dy = by - ay;
  double t = ((x - ax) * dx + (y - ay) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  const double px = ax + t * dx - x;
  const double py = ay + t * dy - y;
  return px * px + py * py <= r * r;
}

}  // namespace

BinaryMask rasterize(int width, int height, const ShapeFn& shape) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(width) * height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const double x = (c + 0.5) / width;
      const double y = (r + 0.5) / height;
      cells[static_cast<std::size_t>(r) * width + c] = shape(x, y) ? 1 : 0;
    }
  }
  return BinaryMask(width, height, std::move(cells));
}

BinaryMask filled(int width, int height) {
  return BinaryMask(width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 1));
}

BinaryMask protrusions(int size) {
  return rasterize(size, size, [](double x, double y) {
    constexpr double kRadius = 0.09;
    constexpr double kHalf = 0.032;
    constexpr double kReach = 0.46;
    return in_disk(x, y, 0.5, 0.5, kRadius) || in_box(x, y, 0.5 - kHalf, 0.5 - kReach, 0.5 + kHalf, 0.5 + kReach) ||
           in_box(x, y, 0.5 - kReach, 0.5 - kHalf, 0.5 + kReach, 0.5 + kHalf);
  });
}

BinaryMask thin_neck(int size) {
  return rasterize(size, size, [](double x, double y) {
    return in_disk(x, y, 0.27, 0.5, 0.22) || in_disk(x, y, 0.73, 0.5, 0.22) ||
           in_box(x, y, 0.3, 0.47, 0.7, 0.53);
  });
}

BinaryMask two_lobe(int size) {
  return rasterize(size, size, [](double x, double y) {
    return in_disk(x, y, 0.32, 0.5, 0.26) || in_disk(x, y, 0.76, 0.5, 0.17) ||
           in_box(x, y, 0.4, 0.44, 0.7, 0.56);
  });
}

BinaryMask dumbbell(int width, int height, double neck) {
  return rasterize(width, height, [neck](double x, double y) {
    return in_ellipse(x, y, 0.25, 0.5, 0.2, 0.4) || in_ellipse(x, y, 0.75, 0.5, 0.2, 0.4) ||
           in_box(x, y, 0.3, 0.5 - neck, 0.7, 0.5 + neck);
  });
}

BinaryMask turtle(int size) {
  return rasterize(size, size, [](double x, double y) {
    const bool body = in_ellipse(x, y, 0.5, 0.5, 0.24, 0.2);
    const bool head = in_capsule(x, y, 0.5, 0.32, 0.5, 0.12, 0.07);
    const bool arms = in_capsule(x, y, 0.38, 0.4, 0.16, 0.22, 0.055) ||
                      in_capsule(x, y, 0.62, 0.4, 0.84, 0.22, 0.055);
    const bool legs = in_capsule(x, y, 0.4, 0.62, 0.2, 0.82, 0.055) ||
                      in_capsule(x, y, 0.6, 0.62, 0.8, 0.82, 0.055);
    const bool tail = in_capsule(x, y, 0.5, 0.66, 0.56, 0.79, 0.03);
    return body || head || arms || legs || tail;
  });
}

BinaryMask human(int size, bool with_hole) {
  return rasterize(size, size, [with_hole](double x, double y) {
    if (with_hole && in_box(x, y, 0.47, 0.42, 0.53, 0.46)) return false;
    const bool head = in_disk(x, y, 0.5, 0.14, 0.08);
    const bool torso = in_box(x, y, 0.38, 0.24, 0.62, 0.58);
    const bool arms = in_capsule(x, y, 0.4, 0.28, 0.16, 0.54, 0.045) ||
                      in_capsule(x, y, 0.6, 0.28, 0.84, 0.54, 0.045);
    const bool legs = in_capsule(x, y, 0.44, 0.55, 0.36, 0.94, 0.055) ||
                      in_capsule(x, y, 0.56, 0.55, 0.64, 0.94, 0.055);
    return head || torso || arms || legs;
  });
}

BinaryMask three_blob(int width, int height) {
  const double aspect = static_cast<double>(height) / width;
  return rasterize(width, height, [aspect](double x, double y) {
    y = 0.5 + (y - 0.5) * aspect;
    return in_disk(x, y, 0.23, 0.5, 0.13) || in_disk(x, y, 0.5, 0.5, 0.16) || in_disk(x, y, 0.73, 0.5, 0.09);
  });
}

BinaryMask disk(int size) {
  return rasterize(size, size, [](double x, double y) { return in_disk(x, y, 0.5, 0.5, 0.45); });
}

BinaryMask rectangle(int width, int height, int margin) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(width) * height, 0);
  for (int r = margin; r < height - margin; ++r)
    for (int c = margin; c < width - margin; ++c) cells[static_cast<std::size_t>(r) * width + c] = 1;
  return BinaryMask(width, height, std::move(cells));
}

}  // namespace shapeparts::fixtures
