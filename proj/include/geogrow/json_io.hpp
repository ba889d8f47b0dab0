#pragma once

#include <string>
#include <vector>

#include <json.hpp>
#include "geogrow/automaton.hpp"
#include "geogrow/families.hpp"
#include "geogrow/graph.hpp"
#include "geogrow/oracle.hpp"
#include "geogrow/polynomial.hpp"
#include "geogrow/rational.hpp"
#include "geogrow/verify.hpp"

namespace geogrow {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);

/// Coefficient array, lowest degree first.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {"schema": "geogrow.rational/1", "num": [...], "den": [...], "text": "..."}
Json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);

/// {"schema": "geogrow.graph/1", "order": n, "edges": [[u, v], ...], "root": r}
Json to_json(const SimpleGraph& g, Vertex root = 0);
GraphSpec graph_from_json(const Json& j);

/// {"schema": "geogrow.automaton/1", "states": ["{}", "{0}", ...],
///  "start": 0, "transitions": [[from, letter, to], ...]}
Json to_json(const GeodesicAutomaton& a);

/// Length-indexed count table shared by automaton streams and the oracle:
/// {"schema": "geogrow.counts/1", "letter": v, "columns": {name: [...]}}
struct CountTable {
  Vertex letter = 0;
  std::vector<std::pair<std::string, std::vector<mpz_class>>> columns;
};
Json to_json(const CountTable& t);
CountTable counts_from_json(const Json& j);
CountTable to_count_table(const BruteForceCounts& c);

/// {"schema": "geogrow.trees/1", "n": n, "count": k, "trees": [[[u, v], ...], ...]}
Json trees_to_json(int n, const std::vector<SimpleGraph>& trees);
Json to_json(const std::vector<LimbCensusReport>& reports);
Json to_json(const VerificationReport& r);
VerificationReport verification_from_json(const Json& j);

/// Throws InputError when j["schema"] is not `schema`.
void expect_schema(const Json& j, const std::string& schema);

}  // namespace geogrow
