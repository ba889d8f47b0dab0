#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "geogrow/graph.hpp"

namespace geogrow {

/// A word over the vertex alphabet of the defining graph.
using Word = std::vector<Vertex>;

/// Direct test, independent of any automaton: w is geodesic unless some
/// letter s occurs twice with every letter in between adjacent to s (then
/// the two copies commute together and cancel).
/// Throws InputError on an invalid letter.
bool is_geodesic(const SimpleGraph& g, const Word& w);

/// Shortlex-least word for the group element of w under numeric letter
/// order: explores the commutation class, cancelling adjacent equal letters
/// whenever one appears. Throws BudgetExceeded if a class exceeds
/// `class_budget` words.
Word shortlex_reduce(const SimpleGraph& g, const Word& w, std::size_t class_budget = 1000000);

/// Exhaustive counts by length 0..max_len.
struct BruteForceCounts {
  Vertex letter = 0;
  std::vector<std::uint64_t> geodesics;
  std::vector<std::uint64_t> starting;  ///< geodesics whose first letter is `letter`
  std::vector<std::uint64_t> ending;    ///< ... whose last letter is `letter`
  std::vector<std::uint64_t> both;      ///< ... both
  std::vector<std::uint64_t> elements;  ///< group elements of each length
};

/// Enumerates every word of length <= max_len. Throws BudgetExceeded if that
/// is more than `word_budget` words. Element counts use shortlex_reduce and
/// can be skipped.
BruteForceCounts brute_force_counts(const SimpleGraph& g, std::size_t max_len, Vertex letter = 0,
                                    std::uint64_t word_budget = 100000000, bool count_elements = true);

}  // namespace geogrow
