// One line per acceptance criterion: PASS or FAIL, wall time, and detail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "geogrow/automaton.hpp"
#include "geogrow/families.hpp"
#include "geogrow/graph_io.hpp"
#include "geogrow/growth.hpp"
#include "geogrow/oracle.hpp"
#include "geogrow/spectral.hpp"
#include "geogrow/verify.hpp"
#include "oracles.hpp"

using namespace geogrow;
using oracle_ref::Poly;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Poly product(std::initializer_list<std::vector<long>> factors) {
  Poly p{1};
  for (const auto& f : factors) p = oracle_ref::mul(p, oracle_ref::from_longs(f));
  return p;
}

RationalFunction rational(const Poly& num, const Poly& den) {
  return RationalFunction(IntPolynomial(num), IntPolynomial(den));
}

std::string pass_count(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

const std::vector<long> kH1{1, 2, 0, -2, -4, -1};
const std::vector<long> kGammaTail{1, 5, 10, 9, -5, -26, -34, -22, -1, 7, 4};
const std::vector<long> kStartTail{1, 4, 4, -3, -9, -5, 3, 1, -3, -3};
const std::vector<long> kBothNum{0,     1,      -5,     -94,    -374,  -456,   955,    4275,  5652,
                                 -1617, -16773, -24255, -7337,  26583, 45100,  26181,  -12789,
                                 -34553, -24957, -3147, 8130,   6288,  1398,   -458,   -284,   -24};
const std::vector<long> kBothDen{1, 3, 2, -3, -9, -8, 0, 4, 3, -1};
const std::vector<long> kDen{1, -8, -85, -243, -222, 332, 1194, 1349, 132, -1510, -2008, -1088, 28, 359, 170, 15};

Outcome criterion1() {
  std::ostringstream os;
  bool ok = true;
  for (const char* name : {"mckay-t1", "mckay-t2"}) {
    const GeodesicAutomaton a(builtin_tree(name).graph());
    os << name << ": " << a.state_count() << " states, " << a.transition_count() << " transitions; ";
    ok = ok && a.state_count() == 32 && a.transition_count() == 466;
  }
  return {ok, os.str()};
}

Outcome criterion2() {
  const Poly gamma_num = product({{1, 1}, kH1, kGammaTail});
  const Poly start_num = product({{0, 1}, {1, 1}, kH1, kStartTail});
  const Poly both_den = product({kBothDen, kDen});
  const Poly den = oracle_ref::from_longs(kDen);
  struct Case {
    const char* label;
    Poly num, den;
    std::function<RationalFunction(const SimpleGraph&)> compute;
  };
  const std::vector<Case> cases{
      {"gamma", gamma_num, den, [](const SimpleGraph& g) { return geodesic_growth_series(g); }},
      {"start0", start_num, den, [](const SimpleGraph& g) { return start0_series(g, 0); }},
      {"both0", oracle_ref::from_longs(kBothNum), both_den, [](const SimpleGraph& g) { return both0_series(g, 0); }},
  };
  bool ok = true;
  std::ostringstream os;
  for (const auto& c : cases) {
    const auto expected = oracle_ref::series(c.num, c.den, 40);
    for (const char* name : {"mckay-t1", "mckay-t2"}) {
      const RationalFunction f = c.compute(builtin_tree(name).graph());
      const bool same = f == rational(c.num, c.den) && f.taylor(40) == expected;
      if (!same) os << c.label << " differs on " << name << ": " << f.to_string() << "; ";
      ok = ok && same;
    }
  }
  const auto direct = GrowthSeries(builtin_tree("mckay-t1").graph()).coefficients(40);
  ok = ok && direct == oracle_ref::series(gamma_num, den, 40);
  if (ok) os << "gamma, start-with-0 and both-0 equal the expanded closed forms; 40 streamed terms agree";
  return {ok, os.str()};
}

Outcome criterion3() {
  const GrowthSeries a(builtin_tree("mckay-t1").graph()), b(builtin_tree("mckay-t2").graph());
  const bool g = a.full() == b.full();
  const bool s = a.start_with(0) == b.start_with(0);
  const bool e = a.end_with(0) == b.end_with(0);
  const bool be = a.start_and_end_with(0) == b.start_and_end_with(0);
  std::ostringstream os;
  os << "gamma " << (g ? "equal" : "differ") << ", start0 " << (s ? "equal" : "differ") << ", end0 "
     << (e ? "equal" : "differ") << ", both0 " << (be ? "equal" : "differ");
  return {g && s && e && be, os.str()};
}

std::string failing_checks(const VerificationReport& r, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) {
    const Check* c = r.find(n);
    if (!c) {
      s += "[missing " + n + "] ";
    } else if (!c->passed) {
      s += "[" + n + ": expected " + c->expected + ", computed " + c->computed + "] ";
    }
  }
  return s;
}

Outcome criterion4() {
  McKaySweepOptions opts;
  opts.tau_max = 6;
  const auto r = verify_thm1(opts);
  const std::vector<std::string> names{"non-isomorphic", "co-spectral", "complements co-spectral",
                                       "line graphs co-spectral", "equal geodesic growth series"};
  const std::string bad = failing_checks(r, names);
  const bool ok = bad.empty() && r.passed();
  return {ok, ok ? "all " + std::to_string(rooted_shapes(2, 6).size()) + " rooted tau on 2..6 vertices, every sub-check"
                 : bad + (r.notes.empty() ? "" : r.notes.front())};
}

const std::vector<std::string> kThm2Counts{"start-with-0 counts agree below length 8",
                                           "start-with-0 counts at length 8", "distinct geodesic growth for tau = P2",
                                           "first Taylor discrepancy",
                                           "degree-10 gap equals 2 deg_tau(0) times the count gap"};
const std::vector<std::string> kThm2Spectral{"co-spectral", "complements co-spectral",
                                             "line graphs not co-spectral for tau = P2"};

Outcome thm2_outcome(const GodsilOptions& opts, const std::vector<std::string>& names) {
  const auto r = verify_thm2(opts);
  const std::string bad = failing_checks(r, names);
  return {bad.empty(), bad.empty() ? "every sub-check holds" : bad};
}

Outcome criterion5() { return thm2_outcome(GodsilOptions{}, kThm2Counts); }
Outcome criterion6() { return thm2_outcome(GodsilOptions{}, kThm2Spectral); }

Outcome criterion7() {
  std::vector<SimpleGraph> graphs;
  for (int n = 1; n <= 7; ++n)
    for (auto& t : enumerate_trees(n)) graphs.push_back(t);
  const std::size_t trees = graphs.size();
  graphs.push_back(builtin_graph("c4").graph);
  std::uint64_t words = 0, mismatches = 0;
  for (const auto& g : graphs) {
    const GeodesicAutomaton a(g);
    const int n = g.order();
    std::vector<Vertex> w;
    for (std::size_t len = 0; len <= 6; ++len) {
      w.assign(len, 0);
      while (true) {
        ++words;
        mismatches += a.accepts(w) != is_geodesic(g, w);
        std::size_t i = len;
        while (i > 0 && w[i - 1] == n - 1) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
      }
    }
  }
  std::ostringstream os;
  os << trees << " trees on <= 7 vertices plus C4, " << words << " words, " << mismatches << " mismatches";
  return {mismatches == 0, os.str()};
}

bool methods_agree(const SimpleGraph& g, std::string& why) {
  const GrowthSeries det(g, SeriesMethod::Determinant), bm(g, SeriesMethod::BerlekampMassey);
  const RationalFunction a = det.full(), b = bm.full();
  const auto streamed = det.coefficients(60);
  if (!(a == b)) {
    why = "full series differ";
    return false;
  }
  if (a.taylor(60) != streamed || b.taylor(60) != streamed) {
    why = "60 streamed coefficients differ";
    return false;
  }
  return true;
}

Outcome criterion8() {
  std::vector<std::pair<std::string, SimpleGraph>> graphs;
  for (const char* name : {"mckay-t1", "mckay-t2", "godsil-s1", "godsil-s2", "godsil-s1-repaired", "godsil-s2-repaired"})
    graphs.emplace_back(name, builtin_tree(name).graph());
  for (const auto& tau : rooted_shapes(2, 6))
    for (const char* name : {"mckay-t1", "mckay-t2", "godsil-s1", "godsil-s2", "godsil-s1-repaired", "godsil-s2-repaired"})
      graphs.emplace_back(std::string("tau.") + name, coalesce(tau, builtin_tree(name)).graph());
  std::size_t good = 0;
  std::string first;
  for (const auto& [label, g] : graphs) {
    std::string why;
    if (methods_agree(g, why))
      ++good;
    else if (first.empty())
      first = label + ": " + why;
  }
  // Distinguished-letter series on the McKay pair.
  std::size_t letter_good = 0;
  for (const char* name : {"mckay-t1", "mckay-t2"}) {
    const GrowthSeries det(builtin_tree(name).graph(), SeriesMethod::Determinant);
    const GrowthSeries bm(builtin_tree(name).graph(), SeriesMethod::BerlekampMassey);
    letter_good += det.start_with(0) == bm.start_with(0) && det.end_with(0) == bm.end_with(0) &&
                   det.start_and_end_with(0) == bm.start_and_end_with(0) &&
                   det.start_with(0).taylor(60) == det.start_with_counts(0, 60);
  }
  const bool ok = good == graphs.size() && letter_good == 2;
  return {ok, pass_count(good, graphs.size()) + " graphs, " + pass_count(letter_good, 2) +
                  " distinguished-letter sets" + (first.empty() ? "" : "; first failure " + first)};
}

Outcome criterion9() {
  std::ostringstream os;
  bool ok = true;
  const std::vector<std::pair<std::string, RootedTree>> limbs{{"T1", builtin_tree("mckay-t1")},
                                                              {"T2", builtin_tree("mckay-t2")}};
  for (int n : {17, 18}) {
    const auto r = limb_census(n, limbs);
    os << "n=" << n << ": " << r[0].count << " vs " << r[1].count << " of " << r[0].total << "; ";
    ok = ok && r[0].count == r[1].count && r[0].count > 0;
  }
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  std::size_t agree = 0;
  for (int n = 1; n <= 12; ++n) {
    const std::size_t oracle_count = oracle_ref::dedup_trees(n).size();
    agree += enumerate_trees(n).size() == oracle_count && oracle_count == expected[static_cast<std::size_t>(n - 1)];
  }
  os << "tree totals n<=12 " << pass_count(agree, 12);
  return {ok && agree == 12, os.str()};
}

Outcome criterion10() {
  std::ostringstream os;
  bool ok = true;
  for (const char* name : {"k2", "e2", "p3", "star3"}) {
    const auto g = builtin_graph(name).graph;
    const auto bf = brute_force_counts(g, 6);
    const auto series = spherical_growth_series(g).taylor(7);
    bool same = series.size() == bf.elements.size();
    for (std::size_t i = 0; same && i < series.size(); ++i) same = series[i] == bf.elements[i];
    if (!same) os << name << " disagrees with enumeration; ";
    ok = ok && same;
  }
  std::size_t good = 0;
  const auto taus = rooted_shapes(2, 6);
  for (const auto& tau : taus)
    good += spherical_growth_series(coalesce(tau, builtin_tree("mckay-t1")).graph()) ==
            spherical_growth_series(coalesce(tau, builtin_tree("mckay-t2")).graph());
  os << "enumeration matches on K2, two points, P3, K1,3; McKay spherical series equal for " << pass_count(good, taus.size())
     << " rooted tau";
  return {ok && good == taus.size(), os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "automaton size 32 states / 466 transitions", 1, criterion1},
      {2, "closed-form McKay series", 10, criterion2},
      {3, "McKay series quartet equal", 10, criterion3},
      {4, "McKay sweep over tau <= 6", 300, criterion4},
      {5, "Godsil start-with-0 counts and degree-10 gap", 120, criterion5},
      {6, "Godsil spectral split", 60, criterion6},
      {7, "automaton vs pair-cancellation oracle", 300, criterion7},
      {8, "determinant vs Berlekamp-Massey", 600, criterion8},
      {9, "limb census n = 17, 18 and tree totals", 600, criterion9},
      {10, "spherical growth", 60, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.passed = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += !o.passed;
    char head[160];
    std::snprintf(head, sizeof head, "criterion %2d: %s  %7.2fs  ", c.id, o.passed ? "PASS" : "FAIL", secs);
    std::cout << head << c.title << " | " << o.detail << std::endl;
  }

  // Not criteria: the same Godsil checks on the 11-vertex repair of the drawn pair.
  GodsilOptions repaired;
  repaired.s1 = builtin_tree("godsil-s1-repaired");
  repaired.s2 = builtin_tree("godsil-s2-repaired");
  const auto r = verify_thm2(repaired);
  std::cout << "info: repaired Godsil pair:";
  for (const auto& c : r.checks) std::cout << " [" << (c.passed ? "ok" : "no") << "] " << c.name << " (" << c.computed << ");";
  std::cout << std::endl;

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
