#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace shapeparts {

struct Pixel {
  int row = 0;
  int col = 0;

  auto operator<=>(const Pixel&) const = default;
};

/// Immutable boolean raster; true marks a shape pixel.
class BinaryMask {
 public:
  BinaryMask(int width, int height, std::vector<std::uint8_t> cells);

  /// Builds a mask from text rows, one string per raster row. `shape` marks
  /// shape pixels, anything else is background. All rows must share a length.
  static BinaryMask from_rows(std::span<const std::string_view> rows, char shape = '#');
  static BinaryMask from_rows(std::initializer_list<std::string_view> rows, char shape = '#');

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool in_image(int row, int col) const noexcept {
    return row >= 0 && col >= 0 && row < height_ && col < width_;
  }
  /// Off-image reads as background.
  bool at(int row, int col) const noexcept {
    return in_image(row, col) && cells_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  std::size_t shape_count() const noexcept;

  BinaryMask transposed() const;
  BinaryMask mirrored() const;   // left-right flip
  BinaryMask rotated90() const;  // clockwise

  bool operator==(const BinaryMask&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

enum class PixelKind : std::uint8_t { Background, Boundary, Interior };

/// Indexed computational domain over a mask. Interior pixels carry unknowns,
/// numbered in row-major order; boundary pixels form the Dirichlet layer.
class DomainGrid {
 public:
  static constexpr std::int32_t kNone = -1;

  const BinaryMask& mask() const noexcept { return mask_; }
  int width() const noexcept { return mask_.width(); }
  int height() const noexcept { return mask_.height(); }

  PixelKind kind(int row, int col) const noexcept {
    if (!mask_.in_image(row, col)) return PixelKind::Background;
    return kinds_[flat(row, col)];
  }
  /// Unknown ordinal of an interior pixel, kNone otherwise (including off-image).
  std::int32_t interior_index(int row, int col) const noexcept {
    if (!mask_.in_image(row, col)) return kNone;
    return index_[flat(row, col)];
  }
  std::int32_t interior_index(Pixel p) const noexcept { return interior_index(p.row, p.col); }

  /// |Omega|: the number of interior unknowns.
  std::size_t omega_size() const noexcept { return interior_.size(); }
  std::span<const Pixel> interior_pixels() const noexcept { return interior_; }
  std::span<const Pixel> boundary_pixels() const noexcept { return boundary_; }
  Pixel pixel(std::size_t k) const noexcept { return interior_[k]; }

  /// Interior 4-neighbours of unknown k in the order up, down, left, right;
  /// kNone where the neighbour is boundary, background or off-image.
  const std::array<std::int32_t, 4>& neighbors(std::size_t k) const noexcept { return neighbors_[k]; }

 private:
  friend std::shared_ptr<const DomainGrid> build_domain(BinaryMask mask);
  explicit DomainGrid(BinaryMask mask);

  std::size_t flat(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * mask_.width() + col;
  }

  BinaryMask mask_;
  std::vector<PixelKind> kinds_;
  std::vector<std::int32_t> index_;
  std::vector<Pixel> interior_;
  std::vector<Pixel> boundary_;
  std::vector<std::array<std::int32_t, 4>> neighbors_;
};

using DomainPtr = std::shared_ptr<const DomainGrid>;

/// Classifies shape pixels. Throws EmptyDomain when the mask has no shape
/// pixel and NoInterior when every shape pixel touches the background.
DomainPtr build_domain(BinaryMask mask);

/// True when both grids index the same mask (pointer identity or equal masks).
bool same_domain(const DomainGrid& a, const DomainGrid& b) noexcept;
void require_same_domain(const DomainGrid& a, const DomainGrid& b);

/// Subset of the interior pixels of a domain.
class RegionMask {
 public:
  RegionMask(DomainPtr domain, std::vector<std::uint8_t> member);

  static RegionMask none(DomainPtr domain);
  static RegionMask all(DomainPtr domain);

  const DomainPtr& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return member_.size(); }
  bool contains(std::size_t k) const noexcept { return member_[k] != 0; }
  /// False for boundary, background and off-image pixels.
  bool contains(Pixel p) const noexcept {
    const auto k = domain_->interior_index(p);
    return k != DomainGrid::kNone && member_[static_cast<std::size_t>(k)] != 0;
  }
  std::span<const std::uint8_t> members() const noexcept { return member_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  RegionMask operator|(const RegionMask& other) const;
  RegionMask operator&(const RegionMask& other) const;
  bool operator==(const RegionMask& other) const;

 private:
  DomainPtr domain_;
  std::vector<std::uint8_t> member_;
};

struct ComponentLabels {
  /// Component id per interior unknown, kNone for non-members.
  std::vector<std::int32_t> component;
  std::size_t count = 0;
};

/// Maximal 4-connected sets of member pixels, ids in row-major first-encounter order.
ComponentLabels connected_components(const RegionMask& region);

}  // namespace shapeparts
