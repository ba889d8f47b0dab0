#include "geogrow/oracle.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "geogrow/errors.hpp"

namespace geogrow {

namespace {

void check_letters(const SimpleGraph& g, const Word& w) {
  for (Vertex s : w)
    if (!g.contains(s)) throw InputError("letter " + std::to_string(s) + " not in the alphabet");
}

std::optional<std::size_t> find_square(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return i;
  return std::nullopt;
}

}  // namespace

bool is_geodesic(const SimpleGraph& g, const Word& w) {
  check_letters(g, w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vertex s = w[i];
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == s) return false;
      if (!g.adjacent(w[j], s)) break;
    }
  }
  return true;
}

Word shortlex_reduce(const SimpleGraph& g, const Word& w, std::size_t class_budget) {
  check_letters(g, w);
  Word current = w;
  for (;;) {
    std::set<Word> seen{current};
    std::deque<const Word*> frontier{&*seen.begin()};
    std::optional<Word> shorter;
    if (auto i = find_square(current)) {
      Word cut = current;
      cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(*i), cut.begin() + static_cast<std::ptrdiff_t>(*i) + 2);
      shorter = std::move(cut);
    }
    while (!shorter && !frontier.empty()) {
      const Word& u = *frontier.front();
      frontier.pop_front();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (!g.adjacent(u[i], u[i + 1])) continue;
        Word v = u;
        std::swap(v[i], v[i + 1]);
        auto [it, fresh] = seen.insert(std::move(v));
        if (!fresh) continue;
        if (seen.size() > class_budget) throw BudgetExceeded("commutation class exceeds budget");
        if (auto j = find_square(*it)) {
          Word cut = *it;
          cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(*j), cut.begin() + static_cast<std::ptrdiff_t>(*j) + 2);
          shorter = std::move(cut);
          break;
        }
        frontier.push_back(&*it);
      }
    }
    if (!shorter) return *seen.begin();  // std::set orders lexicographically
    current = std::move(*shorter);
  }
}

BruteForceCounts brute_force_counts(const SimpleGraph& g, std::size_t max_len, Vertex letter,
                                    std::uint64_t word_budget, bool count_elements) {
  if (!g.contains(letter)) throw InputError("letter " + std::to_string(letter) + " not in the alphabet");
  const auto n = static_cast<std::uint64_t>(g.order());
  std::uint64_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += layer;
    if (total > word_budget) throw BudgetExceeded("enumeration exceeds the word budget of " + std::to_string(word_budget));
    if (len < max_len) {
      if (n != 0 && layer > word_budget / n + 1) throw BudgetExceeded("enumeration exceeds the word budget");
      layer *= n;
    }
  }

  BruteForceCounts out;
  out.letter = letter;
  for (auto* v : {&out.geodesics, &out.starting, &out.ending, &out.both, &out.elements}) v->assign(max_len + 1, 0);

  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len > 0 && n == 0) break;
    Word w(len, 0);
    for (;;) {
      if (is_geodesic(g, w)) {
        ++out.geodesics[len];
        const bool s = len > 0 && w.front() == letter;
        const bool e = len > 0 && w.back() == letter;
        out.starting[len] += s;
        out.ending[len] += e;
        out.both[len] += s && e;
        if (count_elements && shortlex_reduce(g, w) == w) ++out.elements[len];
      }
      // Odometer increment.
      std::size_t k = len;
      while (k > 0) {
        --k;
        if (static_cast<std::uint64_t>(++w[k]) < n) break;
        w[k] = 0;
        if (k == 0) {
          k = len + 1;  // wrapped
          break;
        }
      }
      if (len == 0 || k == len + 1) break;
    }
  }
  return out;
}

}  // namespace geogrow
