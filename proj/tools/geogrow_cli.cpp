#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "geogrow/automaton.hpp"
#include "geogrow/errors.hpp"
#include "geogrow/factor_hints.hpp"
#include "geogrow/families.hpp"
#include "geogrow/graph_io.hpp"
#include "geogrow/growth.hpp"
#include "geogrow/json_io.hpp"
#include "geogrow/oracle.hpp"
#include "geogrow/spectral.hpp"
#include "geogrow/tree_shape.hpp"
#include "geogrow/verify.hpp"

using namespace geogrow;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

bool g_json = false;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string edges_line(const SimpleGraph& g) {
  std::string s;
  for (const Edge& e : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

void print_graph(const SimpleGraph& g, Vertex root = 0) {
  if (g_json)
    emit(to_json(g, root));
  else
    std::cout << format_edge_list(g, root);
}

std::uint64_t oracle_budget() {
  const char* env = std::getenv("GEOGROW_BUDGET");
  if (!env || !*env) return 100000000;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("GEOGROW_BUDGET must be a non-negative integer");
  }
}

int report_exit(const VerificationReport& r) {
  if (g_json)
    emit(to_json(r));
  else
    std::cout << r.to_text();
  return r.passed() ? kOk : kFailed;
}

// ---- graph ----

int cmd_graph_info(const std::string& spec) {
  const GraphSpec gs = load_graph(spec);
  const SimpleGraph& g = gs.graph;
  const auto tri = find_triangle(g);
  const bool tree = is_tree(g);
  if (g_json) {
    Json j = to_json(g, gs.root);
    j["info"] = {{"size", g.size()},
                 {"connected", is_connected(g)},
                 {"tree", tree},
                 {"triangle_free", !tri.has_value()},
                 {"char_poly", to_json(char_poly(g))},
                 {"f_polynomial", to_json(f_polynomial(g))}};
    if (tree) j["info"]["canonical_form"] = canonical_form(g);
    emit(j);
    return kOk;
  }
  std::cout << "vertices: " << g.order() << "\n"
            << "edges: " << g.size() << "\n"
            << "edge list: " << edges_line(g) << "\n"
            << "root: " << gs.root << "\n"
            << "connected: " << (is_connected(g) ? "yes" : "no") << "\n"
            << "tree: " << (tree ? "yes" : "no") << "\n"
            << "triangle-free: " << (tri ? "no" : "yes") << "\n"
            << "characteristic polynomial: " << char_poly(g).to_string("x") << "\n"
            << "f-polynomial: " << f_polynomial(g).to_string("t") << "\n";
  if (tree) std::cout << "canonical form: " << canonical_form(g) << "\n";
  return kOk;
}

// ---- growth ----

struct GrowthArgs {
  std::string spec;
  std::string method = "det";
  std::optional<std::size_t> terms;
  std::optional<Vertex> start0, end0, both0;
  bool spherical = false;
  bool factored = false;
};

int cmd_growth(const GrowthArgs& a) {
  const GraphSpec gs = load_graph(a.spec);
  const SimpleGraph& g = gs.graph;
  const int selectors = a.start0.has_value() + a.end0.has_value() + a.both0.has_value() + a.spherical;
  if (selectors > 1) throw InputError("choose at most one of --start0, --end0, --both0, --spherical");
  for (auto v : {a.start0, a.end0, a.both0})
    if (v && (*v < 0 || *v >= g.order())) throw InputError("vertex " + std::to_string(*v) + " out of range");

  std::string label = "geodesic growth";
  if (a.start0) label = "geodesics starting with " + std::to_string(*a.start0);
  if (a.end0) label = "geodesics ending with " + std::to_string(*a.end0);
  if (a.both0) label = "geodesics starting and ending with " + std::to_string(*a.both0);
  if (a.spherical) label = "spherical growth";

  if (a.method == "stream") {
    const std::size_t k = a.terms.value_or(20);
    std::vector<mpz_class> coeffs;
    if (a.spherical) {
      coeffs = spherical_growth_series(g).taylor(k);
    } else {
      const GrowthSeries gs_series(g);
      if (a.start0)
        coeffs = gs_series.start_with_counts(*a.start0, k);
      else if (a.end0)
        coeffs = gs_series.end_with(*a.end0).taylor(k);
      else if (a.both0)
        coeffs = gs_series.start_and_end_with(*a.both0).taylor(k);
      else
        coeffs = gs_series.coefficients(k);
    }
    if (g_json) {
      CountTable t;
      t.letter = a.start0.value_or(a.end0.value_or(a.both0.value_or(0)));
      t.columns.emplace_back(a.spherical ? "elements" : "geodesics", coeffs);
      if (a.start0) t.columns.back().first = "starting";
      if (a.end0) t.columns.back().first = "ending";
      if (a.both0) t.columns.back().first = "both";
      emit(to_json(t));
    } else {
      std::cout << label << ", lengths 0.." << k - 1 << ":\n";
      for (std::size_t r = 0; r < coeffs.size(); ++r) std::cout << r << " " << coeffs[r] << "\n";
    }
    return kOk;
  }

  SeriesMethod method;
  if (a.method == "det")
    method = SeriesMethod::Determinant;
  else if (a.method == "bm")
    method = SeriesMethod::BerlekampMassey;
  else
    throw InputError("unknown method '" + a.method + "' (det, bm, stream)");

  RationalFunction f;
  if (a.spherical)
    f = spherical_growth_series(g);
  else if (a.start0)
    f = start0_series(g, *a.start0, method);
  else if (a.end0)
    f = end0_series(g, *a.end0, method);
  else if (a.both0)
    f = both0_series(g, *a.both0, method);
  else
    f = geodesic_growth_series(g, method);

  if (g_json) {
    Json j = to_json(f);
    if (a.terms) {
      Json c = Json::array();
      for (const auto& x : f.taylor(*a.terms)) c.push_back(to_json(x));
      j["taylor"] = c;
    }
    emit(j);
    return kOk;
  }
  std::cout << label << ":\n  " << (a.factored ? factored_string(f, known_factor_hints()) : f.to_string()) << "\n";
  if (a.terms) {
    std::cout << "first " << *a.terms << " coefficients:";
    for (const auto& x : f.taylor(*a.terms)) std::cout << " " << x;
    std::cout << "\n";
  }
  return kOk;
}

// ---- trees ----

int cmd_trees_enumerate(int n) {
  const auto trees = enumerate_trees(n);
  if (g_json) {
    emit(trees_to_json(n, trees));
    return kOk;
  }
  std::cout << trees.size() << " trees on " << n << " vertices\n";
  for (const auto& t : trees) std::cout << edges_line(t) << "\n";
  return kOk;
}

int cmd_limb_census(int n, const std::vector<std::string>& specs) {
  std::vector<std::pair<std::string, RootedTree>> limbs;
  for (const auto& s : specs) limbs.emplace_back(s, load_graph(s).as_rooted_tree());
  const auto reports = limb_census(n, limbs);
  if (g_json) {
    emit(to_json(reports));
    return kOk;
  }
  for (const auto& r : reports)
    std::cout << "n=" << r.n << " limb=" << r.limb << " count=" << r.count << " total=" << r.total
              << " proportion=" << r.proportion << "\n";
  return kOk;
}

// ---- oracle ----

int cmd_oracle_check(const std::string& spec, std::size_t max_len, Vertex letter) {
  const SimpleGraph g = load_graph(spec).graph;
  if (letter < 0 || letter >= g.order()) throw InputError("letter out of range");
  const BruteForceCounts bf = brute_force_counts(g, max_len, letter, oracle_budget());
  const GrowthSeries series(g);
  const std::size_t k = max_len + 1;

  CountTable automaton;
  automaton.letter = letter;
  automaton.columns = {{"geodesics", series.coefficients(k)},
                       {"starting", series.start_with_counts(letter, k)},
                       {"ending", series.end_with(letter).taylor(k)},
                       {"both", series.start_and_end_with(letter).taylor(k)},
                       {"elements", spherical_growth_series(g).taylor(k)}};
  const CountTable oracle = to_count_table(bf);

  std::vector<std::string> mismatches;
  for (std::size_t c = 0; c < automaton.columns.size(); ++c)
    if (automaton.columns[c].second != oracle.columns[c].second) mismatches.push_back(automaton.columns[c].first);

  if (g_json) {
    emit(Json{{"schema", "geogrow.oracle_check/1"},
              {"max_len", max_len},
              {"verdict", mismatches.empty() ? "pass" : "fail"},
              {"mismatches", mismatches},
              {"automaton", to_json(automaton)},
              {"oracle", to_json(oracle)}});
  } else {
    std::cout << "length";
    for (const auto& [name, _] : oracle.columns) std::cout << "  " << name << "(oracle/automaton)";
    std::cout << "\n";
    for (std::size_t r = 0; r < k; ++r) {
      std::cout << r;
      for (std::size_t c = 0; c < oracle.columns.size(); ++c)
        std::cout << "  " << oracle.columns[c].second[r] << "/" << automaton.columns[c].second[r];
      std::cout << "\n";
    }
    std::cout << "verdict: " << (mismatches.empty() ? "pass" : "fail") << "\n";
  }
  return mismatches.empty() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic growth of right-angled Coxeter groups on trees"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  app.add_flag("--json", g_json, "Machine-readable output");
  app.fallthrough();

  int rc = kOk;
  std::function<int()> action;

  // graph
  auto* graph = app.add_subcommand("graph", "Inspect and transform graphs");
  graph->require_subcommand(1);
  std::string graph_spec, graph_spec2;
  auto* info = graph->add_subcommand("info", "Order, size, spectrum and clique counts");
  info->add_option("SPEC", graph_spec, "Graph: built-in name, edge-list file or inline edge list")->required();
  info->callback([&] { action = [&] { return cmd_graph_info(graph_spec); }; });
  auto* comp = graph->add_subcommand("complement", "Complement graph");
  comp->add_option("SPEC", graph_spec)->required();
  comp->callback([&] { action = [&] { print_graph(complement(load_graph(graph_spec).graph)); return kOk; }; });
  auto* lg = graph->add_subcommand("linegraph", "Line graph (vertices follow the sorted edge list)");
  lg->add_option("SPEC", graph_spec)->required();
  lg->callback([&] { action = [&] { print_graph(line_graph(load_graph(graph_spec).graph)); return kOk; }; });
  auto* coal = graph->add_subcommand("coalesce", "Coalescence of two rooted trees at their roots");
  coal->add_option("TAU", graph_spec)->required();
  coal->add_option("SIGMA", graph_spec2)->required();
  coal->callback([&] {
    action = [&] {
      const RootedTree t = coalesce(load_graph(graph_spec).as_rooted_tree(), load_graph(graph_spec2).as_rooted_tree());
      print_graph(t.graph(), t.root());
      return kOk;
    };
  });

  // automaton
  auto* aut = app.add_subcommand("automaton", "Geodesic automaton of a triangle-free graph");
  std::string aut_spec;
  bool dot = false;
  aut->add_option("SPEC", aut_spec)->required();
  aut->add_flag("--dot", dot, "Graphviz output");
  aut->callback([&] {
    action = [&] {
      const GeodesicAutomaton a(load_graph(aut_spec).graph);
      if (dot) {
        std::cout << a.to_dot();
      } else if (g_json) {
        emit(to_json(a));
      } else {
        std::cout << "states: " << a.state_count() << "\ntransitions: " << a.transition_count() << "\n";
        for (std::size_t q = 0; q < a.state_count(); ++q) {
          std::cout << q << " " << a.state(static_cast<int>(q)).to_string() << ":";
          for (Vertex s = 0; s < a.alphabet_size(); ++s) {
            const int to = a.transition(static_cast<int>(q), s);
            if (to != GeodesicAutomaton::kFail) std::cout << " " << s << "->" << to;
          }
          std::cout << "\n";
        }
      }
      return kOk;
    };
  });

  // growth
  auto* growth = app.add_subcommand("growth", "Growth series");
  GrowthArgs ga;
  growth->add_option("SPEC", ga.spec)->required();
  growth->add_option("--method", ga.method, "det, bm or stream")->check(CLI::IsMember({"det", "bm", "stream"}));
  growth->add_option("--terms", ga.terms, "Number of coefficients to print");
  growth->add_option("--start0", ga.start0, "Only geodesics starting with V");
  growth->add_option("--end0", ga.end0, "Only geodesics ending with V");
  growth->add_option("--both0", ga.both0, "Only geodesics starting and ending with V");
  growth->add_flag("--spherical", ga.spherical, "Spherical growth (group elements by length)");
  growth->add_flag("--factored", ga.factored, "Print numerator and denominator factored");
  growth->callback([&] { action = [&] { return cmd_growth(ga); }; });

  // trees
  auto* trees = app.add_subcommand("trees", "Free trees");
  trees->require_subcommand(1);
  int tree_n = 0;
  std::vector<std::string> limb_specs;
  auto* en = trees->add_subcommand("enumerate", "All trees on N vertices up to isomorphism");
  en->add_option("N", tree_n)->required()->check(CLI::Range(1, TreeIterator::kMaxOrder));
  en->callback([&] { action = [&] { return cmd_trees_enumerate(tree_n); }; });
  auto* lc = trees->add_subcommand("limb-census", "Trees on N vertices containing a limb");
  lc->add_option("N", tree_n)->required()->check(CLI::Range(1, TreeIterator::kMaxOrder));
  lc->add_option("--limb", limb_specs, "Rooted tree; repeatable")->required();
  lc->callback([&] { action = [&] { return cmd_limb_census(tree_n, limb_specs); }; });

  // verify
  auto* verify = app.add_subcommand("verify", "Reproduce the co-spectral family statements");
  verify->require_subcommand(1);
  McKaySweepOptions thm1;
  GodsilOptions thm2;
  auto* v1 = verify->add_subcommand("thm1", "McKay family: equal growth for every rooted tau");
  v1->add_option("--tau-max", thm1.tau_max, "Largest tau order")->check(CLI::Range(2, 10));
  v1->add_option("--threads", thm1.threads, "Worker threads (0: all cores)");
  v1->callback([&] { action = [&] { return report_exit(verify_thm1(thm1)); }; });
  auto* v2 = verify->add_subcommand("thm2", "Godsil family: co-spectral with distinct growth");
  v2->add_option("--tau-max", thm2.tau_max, "Largest tau order for the spectral checks")->check(CLI::Range(2, 10));
  bool repaired = false;
  v2->add_flag("--repaired", repaired, "Use the 11-vertex repair of the drawn pair");
  v2->callback([&] {
    action = [&] {
      if (repaired) {
        thm2.s1 = builtin_tree("godsil-s1-repaired");
        thm2.s2 = builtin_tree("godsil-s2-repaired");
      }
      return report_exit(verify_thm2(thm2));
    };
  });
  std::string spec_a, spec_b;
  bool with_complement = false, with_line = false;
  auto* vc = verify->add_subcommand("cospectral", "Compare characteristic polynomials");
  vc->add_option("A", spec_a)->required();
  vc->add_option("B", spec_b)->required();
  vc->add_flag("--complement", with_complement, "Also compare complements");
  vc->add_flag("--line-graph", with_line, "Also compare line graphs");
  vc->callback([&] {
    action = [&] {
      return report_exit(
          verify_cospectral(load_graph(spec_a).graph, load_graph(spec_b).graph, with_complement, with_line));
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle->require_subcommand(1);
  std::string oracle_spec;
  std::size_t max_len = 0;
  Vertex letter = 0;
  auto* oc = oracle->add_subcommand("check", "Enumerate words and compare with the automaton");
  oc->add_option("SPEC", oracle_spec)->required();
  oc->add_option("--max-len", max_len, "Longest word length")->required();
  oc->add_option("--letter", letter, "Distinguished letter for the start/end columns");
  oc->callback([&] { action = [&] { return cmd_oracle_check(oracle_spec, max_len, letter); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    rc = action ? action() : kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise GEOGROW_BUDGET)\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return rc;
}
