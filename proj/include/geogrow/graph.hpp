#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geogrow/polynomial.hpp"

namespace geogrow {

using Vertex = int;

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the
/// factory rejects loops, duplicate edges and out-of-range endpoints.
class SimpleGraph {
public:
  SimpleGraph() = default;

  /// Throws InputError on a loop, a duplicate edge or an endpoint outside [0, n).
  static SimpleGraph from_edges(int n, std::span<const Edge> edges);
  static SimpleGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Sorted by (u, v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted neighbour list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const noexcept {
    return a != b && matrix_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] != 0;
  }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// Index of edge {a, b} in edges(), or nullopt.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// A tree with a distinguished root vertex.
class RootedTree {
public:
  RootedTree() = default;
  /// Throws InputError unless `graph` is a tree and root is a vertex of it.
  RootedTree(SimpleGraph graph, Vertex root);

  const SimpleGraph& graph() const noexcept { return graph_; }
  Vertex root() const noexcept { return root_; }
  int order() const noexcept { return graph_.order(); }

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

private:
  SimpleGraph graph_;
  Vertex root_ = 0;
};

/// A clique of size 0, 1 or 2: the state labels of the geodesic automaton.
struct Clique {
  std::array<Vertex, 2> members{-1, -1};
  std::uint8_t size = 0;

  static Clique empty() { return {}; }
  static Clique vertex(Vertex v) { return {{v, -1}, 1}; }
  static Clique edge(Vertex a, Vertex b) { return {{a < b ? a : b, a < b ? b : a}, 2}; }

  bool contains(Vertex v) const noexcept {
    return (size > 0 && members[0] == v) || (size > 1 && members[1] == v);
  }
  std::vector<Vertex> vertices() const { return {members.begin(), members.begin() + size}; }
  std::string to_string() const;

  friend auto operator<=>(const Clique& a, const Clique& b) {
    if (auto c = a.size <=> b.size; c != 0) return c;
    return a.members <=> b.members;
  }
  friend bool operator==(const Clique&, const Clique&) = default;
};

/// Star(v): the neighbours of v, never v itself.
std::vector<Vertex> star(const SimpleGraph& g, Vertex v);

/// Merge two rooted trees at their roots. The first tree keeps its labels;
/// each non-root vertex of the second tree is appended in increasing label
/// order. The result is rooted at the first tree's root.
RootedTree coalesce(const RootedTree& first, const RootedTree& second);

SimpleGraph complement(const SimpleGraph& g);

/// One vertex per edge, in the order of g.edges(); adjacent iff the edges meet.
SimpleGraph line_graph(const SimpleGraph& g);

/// Drops v and closes the gap in the labelling (w > v becomes w - 1).
SimpleGraph delete_vertex(const SimpleGraph& g, Vertex v);

/// Vertex v of g becomes perm[v].
SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> perm);

/// f(t) = sum_i f_i t^i with f_i the number of i-cliques; f_0 = 1.
IntPolynomial f_polynomial(const SimpleGraph& g);

/// Some triangle {a < b < c}, if there is one.
std::optional<std::array<Vertex, 3>> find_triangle(const SimpleGraph& g);
bool is_triangle_free(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);

}  // namespace geogrow
