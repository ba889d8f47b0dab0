#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geogrow/graph.hpp"

namespace geogrow {

/// AHU encoding of a rooted tree: "(" + sorted child encodings + ")".
/// Equal strings iff the rooted trees are isomorphic.
std::string canonical_form(const RootedTree& t);

/// Minimum of the rooted encodings taken at the tree's one or two centres.
/// Throws InputError if `g` is not a tree.
std::string canonical_form(const SimpleGraph& g);

/// The one or two centres of a tree.
std::vector<Vertex> tree_centers(const SimpleGraph& g);

/// One representative per orbit of Aut(t) on vertices (the smallest label in
/// each orbit), ascending.
std::vector<Vertex> root_orbit_representatives(const SimpleGraph& t);

/// Encodings of every branch of a tree. branch(v, i) is the AHU encoding of
/// the component of t - v containing the i-th neighbour of v, rooted there.
class BranchTable {
public:
  explicit BranchTable(const SimpleGraph& t);

  const std::string& branch(Vertex v, std::size_t i) const { return enc_[offset_[static_cast<std::size_t>(v)] + i]; }
  /// Rooted encoding of the whole tree at v.
  std::string rooted_at(Vertex v) const;
  /// Multiset of branch encodings at v.
  std::map<std::string, int> branch_counts(Vertex v) const;

private:
  const SimpleGraph* tree_;
  std::vector<std::size_t> offset_;
  std::vector<std::string> enc_;
};

/// A limb pattern: a rooted tree on at least two vertices, stored as the
/// multiset of its root's child encodings.
class LimbPattern {
public:
  /// Throws InputError if the limb has fewer than two vertices.
  explicit LimbPattern(const RootedTree& limb);

  /// Number of (vertex, nonempty branch subset) pairs of t forming a copy of the limb.
  std::uint64_t occurrences(const BranchTable& table, const SimpleGraph& t) const;
  bool occurs_in(const BranchTable& table, const SimpleGraph& t) const;

private:
  std::map<std::string, int> children_;
};

/// Counts pairs (v, B): v a vertex of t, B a nonempty set of branches at v,
/// with v plus B isomorphic to `limb` as rooted trees.
std::uint64_t limb_occurrences(const SimpleGraph& t, const RootedTree& limb);

}  // namespace geogrow
