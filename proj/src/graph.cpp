#include "geogrow/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "geogrow/errors.hpp"

namespace geogrow {

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  SimpleGraph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw InputError("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "} out of range");
    auto& cell = g.matrix_[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)];
    if (cell) throw InputError("duplicate edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}");
    cell = 1;
    g.matrix_[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.u)] = 1;
    g.edges_.push_back(e);
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) {
    Edge e;
    e.u = a < b ? a : b;
    e.v = a < b ? b : a;
    es.push_back(e);
  }
  return from_edges(n, es);
}

std::optional<std::size_t> SimpleGraph::edge_index(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || !adjacent(a, b)) return std::nullopt;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  return static_cast<std::size_t>(it - edges_.begin());
}

RootedTree::RootedTree(SimpleGraph graph, Vertex root) : graph_(std::move(graph)), root_(root) {
  if (!graph_.contains(root_)) throw InputError("root " + std::to_string(root_) + " is not a vertex");
  if (!is_tree(graph_)) throw InputError("graph is not a tree");
}

std::string Clique::to_string() const {
  std::string s = "{";
  for (std::uint8_t i = 0; i < size; ++i) {
    if (i) s += ",";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

std::vector<Vertex> star(const SimpleGraph& g, Vertex v) {
  if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
  return g.neighbors(v);
}

RootedTree coalesce(const RootedTree& first, const RootedTree& second) {
  const int n1 = first.order();
  const int n2 = second.order();
  const Vertex r2 = second.root();
  std::vector<Vertex> map(static_cast<std::size_t>(n2));
  Vertex next = n1;
  for (Vertex v = 0; v < n2; ++v) map[static_cast<std::size_t>(v)] = (v == r2) ? first.root() : next++;

  std::vector<Edge> edges = first.graph().edges();
  for (const Edge& e : second.graph().edges())
    edges.emplace_back(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
  return RootedTree(SimpleGraph::from_edges(n1 + n2 - 1, edges), first.root());
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
  return SimpleGraph::from_edges(g.order(), edges);
}

SimpleGraph line_graph(const SimpleGraph& g) {
  const auto& es = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
        out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return SimpleGraph::from_edges(static_cast<int>(es.size()), out);
}

SimpleGraph delete_vertex(const SimpleGraph& g, Vertex v) {
  if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::vector<Edge> out;
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) out.emplace_back(shift(e.u), shift(e.v));
  return SimpleGraph::from_edges(g.order() - 1, out);
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw InputError("permutation size mismatch");
  std::vector<Edge> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges())
    out.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return SimpleGraph::from_edges(g.order(), out);
}

IntPolynomial f_polynomial(const SimpleGraph& g) {
  std::vector<mpz_class> f(1, mpz_class(1));
  // Extend each clique only by larger vertices adjacent to all members.
  std::vector<Vertex> clique;
  std::function<void(Vertex)> extend = [&](Vertex from) {
    for (Vertex w = from; w < g.order(); ++w) {
      bool ok = true;
      for (Vertex c : clique)
        if (!g.adjacent(c, w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(w);
      if (f.size() <= clique.size()) f.resize(clique.size() + 1);
      ++f[clique.size()];
      extend(w + 1);
      clique.pop_back();
    }
  };
  extend(0);
  return IntPolynomial(std::move(f));
}

std::optional<std::array<Vertex, 3>> find_triangle(const SimpleGraph& g) {
  for (const Edge& e : g.edges())
    for (Vertex w : g.neighbors(e.v))
      if (w > e.v && g.adjacent(e.u, w)) return std::array<Vertex, 3>{e.u, e.v, w};
  return std::nullopt;
}

bool is_triangle_free(const SimpleGraph& g) { return !find_triangle(g).has_value(); }

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

bool is_tree(const SimpleGraph& g) {
  return g.order() > 0 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

}  // namespace geogrow
