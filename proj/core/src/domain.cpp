#include "shapeparts/domain.hpp"

#include <algorithm>
#include <string>

#include "shapeparts/error.hpp"

namespace shapeparts {

namespace {

constexpr std::array<int, 4> kDRow{-1, 1, 0, 0};
constexpr std::array<int, 4> kDCol{0, 0, -1, 1};

}  // namespace

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::InvalidArgument, "mask dimensions must be at least 1x1");
  }
  if (cells_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::InvalidArgument, "mask cell count does not match width*height");
  }
  for (auto& c : cells_) c = c != 0 ? 1 : 0;
}

BinaryMask BinaryMask::from_rows(std::span<const std::string_view> rows, char shape) {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "no rows given");
  const auto width = rows.front().size();
  std::vector<std::uint8_t> cells;
  cells.reserve(width * rows.size());
  for (const auto row : rows) {
    if (row.size() != width) throw Error(ErrorCode::InvalidArgument, "ragged mask rows");
    for (const char ch : row) cells.push_back(ch == shape ? 1 : 0);
  }
  return BinaryMask(static_cast<int>(width), static_cast<int>(rows.size()), std::move(cells));
}

BinaryMask BinaryMask::from_rows(std::initializer_list<std::string_view> rows, char shape) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()), shape);
}

std::size_t BinaryMask::shape_count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

BinaryMask BinaryMask::transposed() const {
  std::vector<std::uint8_t> out(cells_.size());
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c) out[static_cast<std::size_t>(c) * height_ + r] = at(r, c);
  return BinaryMask(height_, width_, std::move(out));
}

BinaryMask BinaryMask::mirrored() const {
  std::vector<std::uint8_t> out(cells_.size());
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c)
      out[static_cast<std::size_t>(r) * width_ + (width_ - 1 - c)] = at(r, c);
  return BinaryMask(width_, height_, std::move(out));
}

BinaryMask BinaryMask::rotated90() const {
  // (r, c) -> (c, H-1-r); the result is H wide and W tall.
  std::vector<std::uint8_t> out(cells_.size());
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c)
      out[static_cast<std::size_t>(c) * height_ + (height_ - 1 - r)] = at(r, c);
  return BinaryMask(height_, width_, std::move(out));
}

DomainGrid::DomainGrid(BinaryMask mask) : mask_(std::move(mask)) {
  const auto n = mask_.cells().size();
  kinds_.assign(n, PixelKind::Background);
  index_.assign(n, kNone);
  for (int r = 0; r < mask_.height(); ++r) {
    for (int c = 0; c < mask_.width(); ++c) {
      if (!mask_.at(r, c)) continue;
      bool touches_background = false;
      for (std::size_t d = 0; d < 4; ++d) {
        if (!mask_.at(r + kDRow[d], c + kDCol[d])) touches_background = true;
      }
      if (touches_background) {
        kinds_[flat(r, c)] = PixelKind::Boundary;
        boundary_.push_back({r, c});
      } else {
        kinds_[flat(r, c)] = PixelKind::Interior;
        index_[flat(r, c)] = static_cast<std::int32_t>(interior_.size());
        interior_.push_back({r, c});
      }
    }
  }
  neighbors_.resize(interior_.size());
  for (std::size_t k = 0; k < interior_.size(); ++k) {
    const auto p = interior_[k];
    for (std::size_t d = 0; d < 4; ++d) neighbors_[k][d] = interior_index(p.row + kDRow[d], p.col + kDCol[d]);
  }
}

DomainPtr build_domain(BinaryMask mask) {
  if (mask.shape_count() == 0) throw Error(ErrorCode::EmptyDomain, "mask contains no shape pixel");
  DomainPtr domain(new DomainGrid(std::move(mask)));
  if (domain->omega_size() == 0) {
    throw Error(ErrorCode::NoInterior, "every shape pixel lies on the boundary layer");
  }
  return domain;
}

bool same_domain(const DomainGrid& a, const DomainGrid& b) noexcept {
  return &a == &b || a.mask() == b.mask();
}

void require_same_domain(const DomainGrid& a, const DomainGrid& b) {
  if (!same_domain(a, b)) throw Error(ErrorCode::DomainMismatch, "operands live on different domains");
}

RegionMask::RegionMask(DomainPtr domain, std::vector<std::uint8_t> member)
    : domain_(std::move(domain)), member_(std::move(member)) {
  if (!domain_) throw Error(ErrorCode::InvalidArgument, "region without domain");
  if (member_.size() != domain_->omega_size()) {
    throw Error(ErrorCode::DomainMismatch, "region size does not match the interior size");
  }
  for (auto& m : member_) m = m != 0 ? 1 : 0;
}

RegionMask RegionMask::none(DomainPtr domain) {
  const auto n = domain->omega_size();
  return RegionMask(std::move(domain), std::vector<std::uint8_t>(n, 0));
}

RegionMask RegionMask::all(DomainPtr domain) {
  const auto n = domain->omega_size();
  return RegionMask(std::move(domain), std::vector<std::uint8_t>(n, 1));
}

std::size_t RegionMask::count() const noexcept {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), std::uint8_t{1}));
}

RegionMask RegionMask::operator|(const RegionMask& other) const {
  require_same_domain(*domain_, *other.domain_);
  std::vector<std::uint8_t> out(member_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = member_[k] | other.member_[k];
  return RegionMask(domain_, std::move(out));
}

RegionMask RegionMask::operator&(const RegionMask& other) const {
  require_same_domain(*domain_, *other.domain_);
  std::vector<std::uint8_t> out(member_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = member_[k] & other.member_[k];
  return RegionMask(domain_, std::move(out));
}

bool RegionMask::operator==(const RegionMask& other) const {
  return same_domain(*domain_, *other.domain_) && member_ == other.member_;
}

ComponentLabels connected_components(const RegionMask& region) {
  const auto& domain = *region.domain();
  ComponentLabels out;
  out.component.assign(region.size(), DomainGrid::kNone);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < region.size(); ++start) {
    if (!region.contains(start) || out.component[start] != DomainGrid::kNone) continue;
    const auto id = static_cast<std::int32_t>(out.count++);
    out.component[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      for (const auto nb : domain.neighbors(k)) {
        if (nb == DomainGrid::kNone) continue;
        const auto q = static_cast<std::size_t>(nb);
        if (region.contains(q) && out.component[q] == DomainGrid::kNone) {
          out.component[q] = id;
          stack.push_back(q);
        }
      }
    }
  }
  return out;
}

}  // namespace shapeparts
