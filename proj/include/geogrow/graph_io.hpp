#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geogrow/graph.hpp"

namespace geogrow {

/// A parsed graph together with its (optional, default 0) root.
struct GraphSpec {
  SimpleGraph graph;
  Vertex root = 0;

  /// Throws InputError if the graph is not a tree.
  RootedTree as_rooted_tree() const { return RootedTree(graph, root); }
};

/// Line-oriented edge-list format:
///   # comment
///   p <n>
///   e <u> <v>
///   r <root>
/// Errors carry the offending line number.
GraphSpec parse_edge_list(std::string_view text);

/// Edge-list text with edges sorted by (min, max) endpoint. The root line is
/// written only when it differs from 0.
std::string format_edge_list(const SimpleGraph& g, Vertex root = 0);

/// The rooted trees of the two co-spectral families: mckay-t1, mckay-t2,
/// godsil-s1, godsil-s2, godsil-sigma, and the 11-vertex godsil-s1-repaired,
/// godsil-s2-repaired, godsil-sigma-repaired. All rooted at 0.
RootedTree builtin_tree(std::string_view name);
const std::vector<std::string>& builtin_tree_names();

/// Built-in trees plus small parametrised families: k<n> (complete),
/// p<n> (path), c<n> (cycle), e<n> (edgeless), star<n> (K_{1,n}).
GraphSpec builtin_graph(std::string_view name);

/// A graph argument as given on the command line: a built-in name, an inline
/// edge list (lines separated by newlines, ';' or a literal "\n"), or a path
/// to an edge-list file.
GraphSpec load_graph(const std::string& spec);

}  // namespace geogrow
