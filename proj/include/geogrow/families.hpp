#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geogrow/graph.hpp"

namespace geogrow {

/// Every free tree on n vertices exactly once, via level sequences
/// (Wright-Richmond-Odlyzko-McKay successor rule on top of Beyer-Hedetniemi
/// rooted-tree successors).
class TreeIterator {
public:
  /// Throws InputError unless 1 <= n <= kMaxOrder.
  explicit TreeIterator(int n);

  static constexpr int kMaxOrder = 20;

  std::optional<SimpleGraph> next();
  int order() const noexcept { return n_; }

private:
  int n_;
  bool single_pending_ = false;
  std::vector<int> layout_;
  bool done_ = false;
};

std::vector<SimpleGraph> enumerate_trees(int n);

/// Tree built from a level sequence (depth of each vertex in preorder).
SimpleGraph tree_from_levels(const std::vector<int>& levels);

struct LimbCensusReport {
  int n = 0;
  std::string limb;
  std::uint64_t count = 0;  ///< trees on n vertices with at least one copy of the limb
  std::uint64_t total = 0;  ///< all trees on n vertices
  std::string proportion;   ///< count/total reduced, e.g. "3/7"
};

/// One pass over the trees on n vertices, one report per limb.
std::vector<LimbCensusReport> limb_census(int n, const std::vector<std::pair<std::string, RootedTree>>& limbs);
LimbCensusReport limb_census(int n, const RootedTree& limb, const std::string& name = "limb");

}  // namespace geogrow
