#include "shapeparts/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shapeparts {

namespace {

constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), node_(n, kNoNode) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t k) noexcept {
    while (parent_[k] != k) {
      parent_[k] = parent_[parent_[k]];
      k = parent_[k];
    }
    return k;
  }

  std::size_t size(std::size_t root) const noexcept { return size_[root]; }
  std::size_t& node(std::size_t root) noexcept { return node_[root]; }

  /// Links two roots, returning the new root.
  std::size_t link(std::size_t a, std::size_t b) noexcept {
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> node_;
};

}  // namespace

const MergeNode* MergeTree::find_seed(std::size_t seed) const noexcept {
  const auto it = std::find_if(nodes_.begin(), nodes_.end(), [seed](const MergeNode& n) { return n.seed == seed; });
  return it == nodes_.end() ? nullptr : &*it;
}

std::size_t MergeTree::component_count(double tau) const noexcept {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [tau](const MergeNode& n) {
    return n.birth < tau && (!n.parent || tau <= n.death);
  }));
}

MergeTree build_merge_tree(const ScalarField& field, const RegionMask& region) {
  require_same_domain(*field.domain(), *region.domain());
  if (region.empty()) throw Error(ErrorCode::EmptyRegion, "merge tree of an empty region");
  const auto& domain = *field.domain();

  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < region.size(); ++k) {
    if (region.contains(k)) order.push_back(k);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return field[a] < field[b]; });

  std::vector<MergeNode> nodes;
  UnionFind sets(region.size());
  std::vector<std::uint8_t> processed(region.size(), 0);
  const auto elder = [&nodes](std::size_t a, std::size_t b) {
    if (nodes[a].birth != nodes[b].birth) return nodes[a].birth < nodes[b].birth ? a : b;
    return nodes[a].seed < nodes[b].seed ? a : b;
  };

  // Pixels sharing a value are swept as one level so a plateau is born once.
  for (std::size_t begin = 0; begin < order.size();) {
    const double level = field[order[begin]];
    std::size_t end = begin;
    while (end < order.size() && field[order[end]] == level) processed[order[end++]] = 1;

    for (std::size_t i = begin; i < end; ++i) {
      const auto p = order[i];
      for (const auto nb : domain.neighbors(p)) {
        if (nb == DomainGrid::kNone) continue;
        const auto q = static_cast<std::size_t>(nb);
        if (!region.contains(q) || !processed[q]) continue;
        const auto ra = sets.find(p);
        const auto rb = sets.find(q);
        if (ra == rb) continue;
        const auto na = sets.node(ra);
        const auto nb_node = sets.node(rb);
        std::size_t survivor = na != kNoNode ? na : nb_node;
        if (na != kNoNode && nb_node != kNoNode) {
          survivor = elder(na, nb_node);
          const auto younger = survivor == na ? nb_node : na;
          const auto younger_root = survivor == na ? rb : ra;
          nodes[younger].death = level;
          nodes[younger].parent = survivor;
          nodes[younger].area_at_death = sets.size(younger_root);
        }
        const auto root = sets.link(ra, rb);
        sets.node(root) = survivor;
      }
    }

    // Any set still without a component consists only of this level's
    // pixels and has no lower neighbour: a regional minimum is born.
    for (std::size_t i = begin; i < end; ++i) {
      const auto root = sets.find(order[i]);
      if (sets.node(root) != kNoNode) continue;
      sets.node(root) = nodes.size();
      // order[i] is the smallest index of its plateau because the level is swept in index order.
      nodes.push_back(MergeNode{.birth = level, .death = 0.0, .parent = std::nullopt, .seed = order[i], .area_at_death = 0});
    }
    begin = end;
  }

  for (std::size_t k : order) {
    const auto root = sets.find(k);
    auto& node = nodes[sets.node(root)];
    if (!node.parent) node.area_at_death = sets.size(root);
  }
  return MergeTree(std::move(nodes));
}

SaliencyTable saliency_table(const MergeTree& tree, Decomposition& decomposition) {
  SaliencyTable table;
  for (auto& part : decomposition.parts) {
    if (part.sign_class != SignClass::Peripheral) continue;
    const auto k = decomposition.domain->interior_index(part.seed_pixel);
    const MergeNode* node = k == DomainGrid::kNone ? nullptr : tree.find_seed(static_cast<std::size_t>(k));
    if (node == nullptr) {
      throw Error(ErrorCode::SeedMismatch, "watershed seed of part " + std::to_string(part.label) +
                                               " has no merge-tree node");
    }
    const double lifespan = node->lifespan();
    table.push_back(SaliencyRow{.label = part.label,
                                .seed = part.seed_pixel,
                                .birth = node->birth,
                                .death = node->death,
                                .lifespan = lifespan,
                                .lifespan_normalized = lifespan / std::abs(node->birth),
                                .area = node->area_at_death});
    part.saliency = lifespan;
  }
  return table;
}

SaliencyTable salient_rows(const SaliencyTable& table, double fraction) {
  double longest = 0.0;
  for (const auto& row : table) longest = std::max(longest, row.lifespan);
  SaliencyTable out;
  std::copy_if(table.begin(), table.end(), std::back_inserter(out),
               [&](const SaliencyRow& row) { return row.lifespan >= fraction * longest; });
  return out;
}

std::vector<RegionMask> snapshot_series(const OmegaResult& result, std::span<const double> taus) {
  return sublevel_masks(result, taus);
}

}  // namespace shapeparts
