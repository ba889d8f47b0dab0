#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "geogrow/graph.hpp"
#include "oracles.hpp"

namespace testutil {

inline oracle_ref::Edges edges_of(const geogrow::SimpleGraph& g) {
  oracle_ref::Edges out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline geogrow::SimpleGraph graph_of(int n, const oracle_ref::Edges& edges) {
  std::vector<geogrow::Edge> es;
  for (auto [u, v] : edges) es.emplace_back(u, v);
  return geogrow::SimpleGraph::from_edges(n, es);
}

// Uniform labelled tree from a random Pruefer sequence.
inline geogrow::SimpleGraph random_tree(int n, std::mt19937& rng) {
  if (n == 1) return geogrow::SimpleGraph::from_edges(1, {});
  if (n == 2) return geogrow::SimpleGraph::from_edges(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2), degree(n, 1);
  for (int& x : seq) {
    x = pick(rng);
    ++degree[x];
  }
  std::vector<geogrow::Edge> edges;
  for (int x : seq)
    for (int leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return geogrow::SimpleGraph::from_edges(n, edges);
}

inline std::vector<geogrow::Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<geogrow::Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testutil
