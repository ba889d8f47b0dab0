#include "geogrow/json_io.hpp"

#include <limits>

#include "geogrow/errors.hpp"

namespace geogrow {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

void expect_schema(const Json& j, const std::string& schema) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != schema)
    throw InputError("JSON: expected schema " + schema);
}

Json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("JSON: bad integer string");
    return z;
  }
  throw InputError("JSON: expected an integer");
}

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_json(p[static_cast<std::size_t>(i)]));
  return a;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("JSON: polynomial must be an array");
  std::vector<mpz_class> c;
  for (const auto& x : j) c.push_back(mpz_from_json(x));
  return IntPolynomial(std::move(c));
}

Json to_json(const RationalFunction& f) {
  return Json{{"schema", "geogrow.rational/1"},
              {"num", to_json(f.numerator())},
              {"den", to_json(f.denominator())},
              {"text", f.to_string()}};
}

RationalFunction rational_from_json(const Json& j) {
  expect_schema(j, "geogrow.rational/1");
  return RationalFunction(polynomial_from_json(field(j, "num")), polynomial_from_json(field(j, "den")));
}

Json to_json(const SimpleGraph& g, Vertex root) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"schema", "geogrow.graph/1"}, {"order", g.order()}, {"edges", edges}, {"root", root}};
}

GraphSpec graph_from_json(const Json& j) {
  expect_schema(j, "geogrow.graph/1");
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("JSON: edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  GraphSpec spec{SimpleGraph::from_edges(field(j, "order").get<int>(), edges), j.value("root", 0)};
  if (spec.root < 0 || spec.root >= std::max(spec.graph.order(), 1)) throw InputError("JSON: root out of range");
  return spec;
}

Json to_json(const GeodesicAutomaton& a) {
  Json states = Json::array();
  for (const Clique& c : a.states()) states.push_back(c.to_string());
  Json transitions = Json::array();
  for (std::size_t q = 0; q < a.state_count(); ++q)
    for (Vertex s = 0; s < a.alphabet_size(); ++s) {
      const int to = a.transition(static_cast<int>(q), s);
      if (to != GeodesicAutomaton::kFail) transitions.push_back({q, s, to});
    }
  return Json{{"schema", "geogrow.automaton/1"},
              {"alphabet", a.alphabet_size()},
              {"states", states},
              {"start", GeodesicAutomaton::start()},
              {"transitions", transitions}};
}

Json to_json(const CountTable& t) {
  Json cols = Json::object();
  for (const auto& [name, values] : t.columns) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(to_json(v));
    cols[name] = a;
  }
  return Json{{"schema", "geogrow.counts/1"}, {"letter", t.letter}, {"columns", cols}};
}

CountTable counts_from_json(const Json& j) {
  expect_schema(j, "geogrow.counts/1");
  CountTable t;
  t.letter = j.value("letter", 0);
  for (const auto& [name, values] : field(j, "columns").items()) {
    std::vector<mpz_class> v;
    for (const auto& x : values) v.push_back(mpz_from_json(x));
    t.columns.emplace_back(name, std::move(v));
  }
  return t;
}

CountTable to_count_table(const BruteForceCounts& c) {
  auto conv = [](const std::vector<std::uint64_t>& v) {
    std::vector<mpz_class> out;
    for (auto x : v) out.emplace_back(std::to_string(x));
    return out;
  };
  CountTable t;
  t.letter = c.letter;
  t.columns = {{"geodesics", conv(c.geodesics)},
               {"starting", conv(c.starting)},
               {"ending", conv(c.ending)},
               {"both", conv(c.both)}};
  if (!c.elements.empty()) t.columns.emplace_back("elements", conv(c.elements));
  return t;
}

Json trees_to_json(int n, const std::vector<SimpleGraph>& trees) {
  Json list = Json::array();
  for (const auto& t : trees) {
    Json edges = Json::array();
    for (const Edge& e : t.edges()) edges.push_back({e.u, e.v});
    list.push_back(edges);
  }
  return Json{{"schema", "geogrow.trees/1"}, {"n", n}, {"count", trees.size()}, {"trees", list}};
}

Json to_json(const std::vector<LimbCensusReport>& reports) {
  Json rows = Json::array();
  for (const auto& r : reports)
    rows.push_back({{"n", r.n}, {"limb", r.limb}, {"count", r.count}, {"total", r.total}, {"proportion", r.proportion}});
  return Json{{"schema", "geogrow.limb_census/1"}, {"rows", rows}};
}

Json to_json(const VerificationReport& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"passed", c.passed}});
  return Json{{"schema", "geogrow.verification/1"},
              {"claim", r.claim},
              {"verdict", r.verdict()},
              {"inputs", inputs},
              {"checks", checks},
              {"notes", r.notes},
              {"seconds", r.seconds}};
}

VerificationReport verification_from_json(const Json& j) {
  expect_schema(j, "geogrow.verification/1");
  VerificationReport r;
  r.claim = field(j, "claim").get<std::string>();
  for (const auto& [k, v] : field(j, "inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  for (const auto& c : field(j, "checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                        c.at("computed").get<std::string>(), c.at("passed").get<bool>()});
  r.notes = field(j, "notes").get<std::vector<std::string>>();
  r.seconds = j.value("seconds", 0.0);
  return r;
}

}  // namespace geogrow
