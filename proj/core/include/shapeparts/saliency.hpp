#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shapeparts/decompose.hpp"

namespace shapeparts {

struct MergeNode {
  double birth = 0.0;  // value at the creating regional minimum
  double death = 0.0;  // merge level, or 0 for components that reach the interface
  std::optional<std::size_t> parent;
  std::size_t seed = 0;  // interior index of the minimum's representative
  std::size_t area_at_death = 0;

  double lifespan() const noexcept { return death - birth; }
};

/// 0-dimensional sublevel-set persistence of a field over a region.
class MergeTree {
 public:
  explicit MergeTree(std::vector<MergeNode> nodes) : nodes_(std::move(nodes)) {}

  std::span<const MergeNode> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const MergeNode* find_seed(std::size_t seed) const noexcept;

  /// Number of connected components of {w < tau} within the region.
  std::size_t component_count(double tau) const noexcept;

 private:
  std::vector<MergeNode> nodes_;
};

/// Union-find sweep in increasing field order. Components are born at
/// regional minima; at a merge the younger one (higher birth, then later
/// seed in row-major order) dies. Survivors die at level 0.
MergeTree build_merge_tree(const ScalarField& field, const RegionMask& region);

struct SaliencyRow {
  std::int32_t label = 0;
  Pixel seed;
  double birth = 0.0;
  double death = 0.0;
  double lifespan = 0.0;
  double lifespan_normalized = 0.0;  // lifespan / |birth|
  std::size_t area = 0;
};

using SaliencyTable = std::vector<SaliencyRow>;

/// One row per peripheral part, joined by seed; also fills PartRecord::saliency.
SaliencyTable saliency_table(const MergeTree& tree, Decomposition& decomposition);

/// Rows whose lifespan is at least `fraction` of the largest lifespan.
SaliencyTable salient_rows(const SaliencyTable& table, double fraction);

std::vector<RegionMask> snapshot_series(const OmegaResult& result, std::span<const double> taus);

}  // namespace shapeparts
