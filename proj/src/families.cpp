#include "geogrow/families.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "geogrow/errors.hpp"
#include "geogrow/tree_shape.hpp"

namespace geogrow {

namespace {

using Layout = std::vector<int>;

// Beyer-Hedetniemi: next rooted level sequence, regenerating from position p.
std::optional<Layout> next_rooted(const Layout& pred, std::optional<std::size_t> from = std::nullopt) {
  std::size_t p;
  if (from) {
    p = *from;
  } else {
    p = pred.size() - 1;
    while (p > 0 && pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

// Left subtree of the root (depths shifted up by one) and the rest.
std::pair<Layout, Layout> split(const Layout& layout) {
  std::size_t m = layout.size();
  bool one = false;
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout[i] == 1) {
      if (one) {
        m = i;
        break;
      }
      one = true;
    }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// A level sequence is the canonical representative of a free tree when the
// root's left subtree is not higher than the remainder, and on equal height
// is not larger or lexicographically later.
std::optional<Layout> next_free(const Layout& candidate) {
  auto [left, rest] = split(candidate);
  const int lh = *std::max_element(left.begin(), left.end());
  const int rh = *std::max_element(rest.begin(), rest.end());
  bool valid = rh >= lh;
  if (valid && rh == lh) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto next = next_rooted(candidate, p);
  if (!next) return std::nullopt;
  if (candidate[p] > 2) {
    auto [nl, nr] = split(*next);
    const int h = *std::max_element(nl.begin(), nl.end());
    const auto len = static_cast<std::size_t>(h + 1);
    for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

}  // namespace

SimpleGraph tree_from_levels(const std::vector<int>& levels) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    stack.push_back(i);
  }
  return SimpleGraph::from_edges(static_cast<int>(levels.size()), edges);
}

TreeIterator::TreeIterator(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw InputError("tree order must be in [1, " + std::to_string(kMaxOrder) + "], got " + std::to_string(n));
  if (n == 1) {
    single_pending_ = true;
    return;
  }
  // Path rooted at its centre.
  for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
}

std::optional<SimpleGraph> TreeIterator::next() {
  if (n_ == 1) {
    if (!single_pending_) return std::nullopt;
    single_pending_ = false;
    return SimpleGraph::from_edges(1, {});
  }
  if (done_) return std::nullopt;
  auto valid = next_free(layout_);
  if (!valid) {
    done_ = true;
    return std::nullopt;
  }
  SimpleGraph g = tree_from_levels(*valid);
  auto succ = next_rooted(*valid);
  if (succ) layout_ = std::move(*succ);
  else done_ = true;
  return g;
}

std::vector<SimpleGraph> enumerate_trees(int n) {
  TreeIterator it(n);
  std::vector<SimpleGraph> out;
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<LimbCensusReport> limb_census(int n, const std::vector<std::pair<std::string, RootedTree>>& limbs) {
  std::vector<LimbPattern> patterns;
  std::vector<LimbCensusReport> reports;
  for (const auto& [name, limb] : limbs) {
    patterns.emplace_back(limb);
    LimbCensusReport r;
    r.n = n;
    r.limb = name;
    reports.push_back(r);
  }
  TreeIterator it(n);
  std::uint64_t total = 0;
  while (auto t = it.next()) {
    ++total;
    if (n < 2) continue;
    BranchTable table(*t);
    for (std::size_t i = 0; i < patterns.size(); ++i)
      if (patterns[i].occurs_in(table, *t)) ++reports[i].count;
  }
  for (auto& r : reports) {
    r.total = total;
    mpq_class q(static_cast<unsigned long>(r.count), static_cast<unsigned long>(total));
    q.canonicalize();
    r.proportion = q.get_str();
  }
  return reports;
}

LimbCensusReport limb_census(int n, const RootedTree& limb, const std::string& name) {
  return limb_census(n, {{name, limb}}).front();
}

}  // namespace geogrow
