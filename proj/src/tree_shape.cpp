#include "geogrow/tree_shape.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "geogrow/errors.hpp"

namespace geogrow {

namespace {

std::string encode_rooted(const SimpleGraph& g, Vertex root) {
  // Iterative post-order so deep paths do not blow the stack.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> parent(n, -1), order;
  order.reserve(n);
  std::vector<Vertex> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
  }
  std::vector<std::vector<std::string>> kids(n);
  std::vector<std::string> enc(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    auto& ch = kids[v];
    std::sort(ch.begin(), ch.end());
    std::string s = "(";
    for (auto& c : ch) s += c;
    s += ")";
    ch.clear();
    if (*it != root) kids[static_cast<std::size_t>(parent[v])].push_back(std::move(s));
    else enc[v] = std::move(s);
  }
  return enc[static_cast<std::size_t>(root)];
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::string canonical_form(const RootedTree& t) { return encode_rooted(t.graph(), t.root()); }

std::vector<Vertex> tree_centers(const SimpleGraph& g) {
  if (!is_tree(g)) throw InputError("graph is not a tree");
  const int n = g.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : g.neighbors(v))
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string canonical_form(const SimpleGraph& g) {
  std::string best;
  for (Vertex c : tree_centers(g)) {
    std::string e = encode_rooted(g, c);
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

std::vector<Vertex> root_orbit_representatives(const SimpleGraph& t) {
  if (!is_tree(t)) throw InputError("graph is not a tree");
  BranchTable table(t);
  std::map<std::string, Vertex> first;
  for (Vertex v = 0; v < t.order(); ++v) first.emplace(table.rooted_at(v), v);
  std::vector<Vertex> reps;
  for (const auto& [enc, v] : first) reps.push_back(v);
  std::sort(reps.begin(), reps.end());
  return reps;
}

BranchTable::BranchTable(const SimpleGraph& t) : tree_(&t) {
  if (!is_tree(t)) throw InputError("graph is not a tree");
  const auto n = static_cast<std::size_t>(t.order());
  offset_.resize(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + t.neighbors(static_cast<Vertex>(v)).size();
  enc_.resize(offset_[n]);
  std::vector<char> done(enc_.size(), 0);

  auto slot = [&](Vertex from, Vertex to) {
    const auto& nb = t.neighbors(from);
    auto it = std::lower_bound(nb.begin(), nb.end(), to);
    return offset_[static_cast<std::size_t>(from)] + static_cast<std::size_t>(it - nb.begin());
  };

  // branch(from -> to) depends on branch(to -> w) for w != from.
  std::function<const std::string&(Vertex, Vertex)> compute = [&](Vertex from, Vertex to) -> const std::string& {
    const std::size_t s = slot(from, to);
    if (done[s]) return enc_[s];
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(to))
      if (w != from) kids.push_back(compute(to, w));
    std::sort(kids.begin(), kids.end());
    std::string e = "(";
    for (auto& k : kids) e += k;
    e += ")";
    enc_[s] = std::move(e);
    done[s] = 1;
    return enc_[s];
  };
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    for (Vertex w : t.neighbors(v)) compute(v, w);
}

std::string BranchTable::rooted_at(Vertex v) const {
  const std::size_t deg = tree_->neighbors(v).size();
  std::vector<std::string> kids;
  kids.reserve(deg);
  for (std::size_t i = 0; i < deg; ++i) kids.push_back(branch(v, i));
  std::sort(kids.begin(), kids.end());
  std::string e = "(";
  for (auto& k : kids) e += k;
  return e + ")";
}

std::map<std::string, int> BranchTable::branch_counts(Vertex v) const {
  std::map<std::string, int> counts;
  const std::size_t deg = tree_->neighbors(v).size();
  for (std::size_t i = 0; i < deg; ++i) ++counts[branch(v, i)];
  return counts;
}

LimbPattern::LimbPattern(const RootedTree& limb) {
  if (limb.order() < 2) throw InputError("a limb needs at least two vertices");
  BranchTable table(limb.graph());
  children_ = table.branch_counts(limb.root());
}

std::uint64_t LimbPattern::occurrences(const BranchTable& table, const SimpleGraph& t) const {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (static_cast<std::size_t>(t.degree(v)) < children_.size()) continue;
    auto have = table.branch_counts(v);
    std::uint64_t ways = 1;
    for (const auto& [enc, need] : children_) {
      auto it = have.find(enc);
      ways *= binomial(it == have.end() ? 0 : it->second, need);
      if (ways == 0) break;
    }
    total += ways;
  }
  return total;
}

bool LimbPattern::occurs_in(const BranchTable& table, const SimpleGraph& t) const {
  for (Vertex v = 0; v < t.order(); ++v) {
    auto have = table.branch_counts(v);
    bool ok = true;
    for (const auto& [enc, need] : children_) {
      auto it = have.find(enc);
      if (it == have.end() || it->second < need) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::uint64_t limb_occurrences(const SimpleGraph& t, const RootedTree& limb) {
  LimbPattern pattern(limb);
  BranchTable table(t);
  return pattern.occurrences(table, t);
}

}  // namespace geogrow
