#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geogrow/graph.hpp"
#include "geogrow/spectral.hpp"

namespace geogrow {

/// Deterministic automaton accepting the geodesic words of the right-angled
/// Coxeter group on a triangle-free graph. States are the cliques of size at
/// most two, ordered empty set, singletons ascending, edges ascending; the
/// empty clique is the start state and every listed state accepts. Reading s
/// from clique c fails if s is in c, otherwise moves to (Star(s) & c) + {s}.
/// The fail sink is implicit.
class GeodesicAutomaton {
public:
  static constexpr int kFail = -1;

  /// Throws TriangleError if g has a triangle.
  explicit GeodesicAutomaton(SimpleGraph g);

  const SimpleGraph& graph() const noexcept { return graph_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  int alphabet_size() const noexcept { return graph_.order(); }
  static constexpr int start() noexcept { return 0; }

  const std::vector<Clique>& states() const noexcept { return states_; }
  const Clique& state(int i) const { return states_.at(static_cast<std::size_t>(i)); }

  /// Target state, or kFail.
  int transition(int state, Vertex letter) const {
    return delta_[static_cast<std::size_t>(state) * static_cast<std::size_t>(graph_.order()) +
                  static_cast<std::size_t>(letter)];
  }

  std::size_t transition_count() const noexcept { return live_transitions_; }

  /// Index of clique c. Throws InputError when c is not a state.
  int state_of_clique(const Clique& c) const;

  /// States q with delta(q, s) accepting and different from {s}.
  std::vector<int> end_states_for_letter(Vertex s) const;

  /// State reached from the start on w, or kFail.
  int run(const std::vector<Vertex>& w) const;
  bool accepts(const std::vector<Vertex>& w) const { return run(w) != kFail; }

  std::string to_dot() const;

private:
  SimpleGraph graph_;
  std::vector<Clique> states_;
  std::vector<int> delta_;
  std::size_t live_transitions_ = 0;
};

/// M[i][j] = number of letters taking state i to state j; FAIL contributes nothing.
IntMatrix transition_matrix(const GeodesicAutomaton& a);

}  // namespace geogrow
