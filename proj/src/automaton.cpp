#include "geogrow/automaton.hpp"

#include <sstream>

#include "geogrow/errors.hpp"

namespace geogrow {

GeodesicAutomaton::GeodesicAutomaton(SimpleGraph g) : graph_(std::move(g)) {
  if (auto tri = find_triangle(graph_)) throw TriangleError((*tri)[0], (*tri)[1], (*tri)[2]);

  const int n = graph_.order();
  states_.reserve(1 + static_cast<std::size_t>(n) + graph_.size());
  states_.push_back(Clique::empty());
  for (Vertex v = 0; v < n; ++v) states_.push_back(Clique::vertex(v));
  for (const Edge& e : graph_.edges()) states_.push_back(Clique::edge(e.u, e.v));

  delta_.assign(states_.size() * static_cast<std::size_t>(n), kFail);
  for (std::size_t q = 0; q < states_.size(); ++q) {
    const Clique& c = states_[q];
    for (Vertex s = 0; s < n; ++s) {
      if (c.contains(s)) continue;
      Clique target = Clique::vertex(s);
      for (Vertex m : c.vertices())
        if (graph_.adjacent(m, s)) {
          // A second commuting member would close a triangle with s.
          target = Clique::edge(s, m);
        }
      delta_[q * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)] = state_of_clique(target);
      ++live_transitions_;
    }
  }
}

int GeodesicAutomaton::state_of_clique(const Clique& c) const {
  const int n = graph_.order();
  switch (c.size) {
    case 0:
      return 0;
    case 1:
      if (graph_.contains(c.members[0])) return 1 + c.members[0];
      break;
    case 2:
      if (auto idx = graph_.edge_index(c.members[0], c.members[1])) return 1 + n + static_cast<int>(*idx);
      break;
    default:
      break;
  }
  throw InputError("clique " + c.to_string() + " is not a state of the automaton");
}

std::vector<int> GeodesicAutomaton::end_states_for_letter(Vertex s) const {
  if (!graph_.contains(s)) throw InputError("letter " + std::to_string(s) + " not in the alphabet");
  const int own = state_of_clique(Clique::vertex(s));
  std::vector<int> out;
  for (int q = 0; q < static_cast<int>(states_.size()); ++q) {
    int t = transition(q, s);
    if (t != kFail && t != own) out.push_back(q);
  }
  return out;
}

int GeodesicAutomaton::run(const std::vector<Vertex>& w) const {
  int q = start();
  for (Vertex s : w) {
    if (!graph_.contains(s)) throw InputError("letter " + std::to_string(s) + " not in the alphabet");
    q = transition(q, s);
    if (q == kFail) return kFail;
  }
  return q;
}

std::string GeodesicAutomaton::to_dot() const {
  std::ostringstream os;
  os << "digraph geodesics {\n  rankdir=LR;\n";
  for (std::size_t q = 0; q < states_.size(); ++q)
    os << "  q" << q << " [label=\"" << states_[q].to_string() << "\"" << (q == 0 ? ", shape=doublecircle" : "")
       << "];\n";
  for (std::size_t q = 0; q < states_.size(); ++q)
    for (Vertex s = 0; s < graph_.order(); ++s) {
      int t = transition(static_cast<int>(q), s);
      if (t != kFail) os << "  q" << q << " -> q" << t << " [label=\"" << s << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

IntMatrix transition_matrix(const GeodesicAutomaton& a) {
  IntMatrix m(a.state_count());
  for (std::size_t q = 0; q < a.state_count(); ++q)
    for (Vertex s = 0; s < a.alphabet_size(); ++s) {
      int t = a.transition(static_cast<int>(q), s);
      if (t != GeodesicAutomaton::kFail) m(q, static_cast<std::size_t>(t)) += 1;
    }
  return m;
}

}  // namespace geogrow
