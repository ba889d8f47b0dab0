#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geogrow/graph.hpp"
#include "geogrow/graph_io.hpp"

namespace geogrow {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
};

/// Outcome of one reproduction run. Never silent: every sub-claim is a Check,
/// and anything worth knowing about a mismatch goes into notes.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const;
  std::string verdict() const { return passed() ? "pass" : "fail"; }
  const Check* find(const std::string& name) const;
  std::string to_text() const;
};

/// Every tree on j vertices, once per orbit of root choices, for lo <= j <= hi.
std::vector<RootedTree> rooted_shapes(int lo, int hi);

struct McKaySweepOptions {
  int tau_max = 6;
  RootedTree t1 = builtin_tree("mckay-t1");
  RootedTree t2 = builtin_tree("mckay-t2");
  /// Also require determinant and Berlekamp-Massey series to agree and to
  /// reproduce 60 streamed coefficients.
  bool cross_check_methods = true;
  bool spherical = true;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// For every rooted tau on 2..tau_max vertices: tau.T1 and tau.T2 are
/// non-isomorphic, co-spectral, with co-spectral complements and line graphs
/// (plus L of the complement and the complement of L), and have equal
/// geodesic growth series.
VerificationReport verify_thm1(const McKaySweepOptions& opts = {});

struct GodsilOptions {
  RootedTree s1 = builtin_tree("godsil-s1");
  RootedTree s2 = builtin_tree("godsil-s2");
  int tau_max = 6;
  std::size_t count_length = 8;
  std::uint64_t expected_count1 = 8919523;
  std::uint64_t expected_count2 = 8919522;
  std::size_t expected_first_difference = 10;
  bool cross_check_methods = true;
};

/// The distinct-growth family: start-with-0 counts agree below count_length
/// and hit the expected values there; for tau = P2 the geodesic series differ
/// first at expected_first_difference by 2 deg_tau(0) times the count gap;
/// tau.S1 and tau.S2 are co-spectral with co-spectral complements for every
/// rooted tau up to tau_max, while the line graphs split for tau = P2.
VerificationReport verify_thm2(const GodsilOptions& opts = {});

/// Co-spectrality of two graphs, optionally of their complements and line graphs.
VerificationReport verify_cospectral(const SimpleGraph& a, const SimpleGraph& b, bool complements, bool line_graphs);

}  // namespace geogrow
