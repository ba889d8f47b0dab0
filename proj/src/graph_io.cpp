#include "geogrow/graph_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "geogrow/errors.hpp"

namespace geogrow {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

RootedTree tree_from(int n, std::initializer_list<std::pair<int, int>> edges) {
  return RootedTree(SimpleGraph::from_edges(n, edges), 0);
}

bool parse_suffix(std::string_view name, std::string_view prefix, int& n) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return false;
  auto rest = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  return ec == std::errc() && ptr == rest.data() + rest.size() && n >= 0;
}

}  // namespace

GraphSpec parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::optional<Vertex> root;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = split_tokens(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    const std::string_view kind = toks[0];
    if (kind == "p") {
      if (toks.size() != 2) throw ParseError(line_no, "header must be 'p <n>'");
      if (n) throw ParseError(line_no, "duplicate header");
      int v = parse_int(toks[1], line_no);
      if (v < 0) throw ParseError(line_no, "negative vertex count");
      n = v;
    } else if (kind == "e") {
      if (!n) throw ParseError(line_no, "edge before 'p' header");
      if (toks.size() != 3) throw ParseError(line_no, "edge must be 'e <u> <v>'");
      int a = parse_int(toks[1], line_no);
      int b = parse_int(toks[2], line_no);
      if (a < 0 || b < 0 || a >= *n || b >= *n)
        throw ParseError(line_no, "vertex out of range [0, " + std::to_string(*n) + ")");
      if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
      Edge e(a, b);
      if (!seen.insert(e).second)
        throw ParseError(line_no, "duplicate edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}");
      edges.push_back(e);
    } else if (kind == "r") {
      if (!n) throw ParseError(line_no, "root before 'p' header");
      if (toks.size() != 2) throw ParseError(line_no, "root must be 'r <v>'");
      int r = parse_int(toks[1], line_no);
      if (r < 0 || r >= *n) throw ParseError(line_no, "root out of range");
      root = r;
    } else {
      throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'p <n>' header");
  return GraphSpec{SimpleGraph::from_edges(*n, edges), root.value_or(0)};
}

std::string format_edge_list(const SimpleGraph& g, Vertex root) {
  std::ostringstream os;
  os << "p " << g.order() << "\n";
  for (const Edge& e : g.edges()) os << "e " << e.u << " " << e.v << "\n";
  if (root != 0) os << "r " << root << "\n";
  return os.str();
}

const std::vector<std::string>& builtin_tree_names() {
  static const std::vector<std::string> names{"mckay-t1", "mckay-t2", "godsil-s1", "godsil-s2", "godsil-sigma",
                                                  "godsil-s1-repaired", "godsil-s2-repaired",
                                                  "godsil-sigma-repaired"};
  return names;
}

RootedTree builtin_tree(std::string_view name) {
  // McKay's pair: isomorphic as graphs, not as rooted trees.
  if (name == "mckay-t1")
    return tree_from(16, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8},
                          {5, 9}, {8, 10}, {9, 11}, {10, 12}, {11, 13}, {13, 14}, {13, 15}});
  if (name == "mckay-t2")
    return tree_from(16, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 8},
                          {5, 9}, {8, 10}, {9, 11}, {11, 12}, {11, 13}, {12, 14}, {13, 15}});
  // Godsil's pair.
  if (name == "godsil-s1")
    return tree_from(10, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {5, 7}, {7, 8}, {7, 9}});
  if (name == "godsil-s2")
    return tree_from(10, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {7, 8}, {8, 9}});
  // The drawn pair is not co-spectral. One subdivided edge each (new vertex 10)
  // gives two roots of a single 11-vertex tree with equal vertex-deleted spectra.
  if (name == "godsil-s1-repaired")
    return tree_from(11, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {5, 10}, {7, 10}, {7, 8}, {7, 9}});
  if (name == "godsil-s2-repaired")
    return tree_from(11, {{0, 10}, {1, 10}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {7, 8}, {8, 9}});
  if (name == "godsil-sigma-repaired")
    return tree_from(8, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});
  // Drawn on {0,2,4,5,7,8,9}; relabelled in increasing order.
  if (name == "godsil-sigma") return tree_from(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
  throw InputError("unknown built-in tree '" + std::string(name) + "'");
}

GraphSpec builtin_graph(std::string_view name) {
  for (const auto& t : builtin_tree_names())
    if (name == t) {
      RootedTree tree = builtin_tree(name);
      return GraphSpec{tree.graph(), tree.root()};
    }
  int n = 0;
  std::vector<Edge> edges;
  if (parse_suffix(name, "star", n)) {
    for (Vertex v = 1; v <= n; ++v) edges.emplace_back(0, v);
    return GraphSpec{SimpleGraph::from_edges(n + 1, edges), 0};
  }
  if (parse_suffix(name, "k", n)) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return GraphSpec{SimpleGraph::from_edges(n, edges), 0};
  }
  if (parse_suffix(name, "p", n)) {
    for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
    return GraphSpec{SimpleGraph::from_edges(n, edges), 0};
  }
  if (parse_suffix(name, "c", n)) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
    return GraphSpec{SimpleGraph::from_edges(n, edges), 0};
  }
  if (parse_suffix(name, "e", n)) return GraphSpec{SimpleGraph::from_edges(n, edges), 0};
  throw InputError("unknown built-in graph '" + std::string(name) + "'");
}

GraphSpec load_graph(const std::string& spec) {
  const bool looks_inline = spec.find('\n') != std::string::npos || spec.find(';') != std::string::npos ||
                            spec.find("\\n") != std::string::npos || spec.rfind("p ", 0) == 0;
  if (looks_inline) {
    std::string text;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      if (spec[i] == ';') {
        text += '\n';
      } else if (spec[i] == '\\' && i + 1 < spec.size() && spec[i + 1] == 'n') {
        text += '\n';
        ++i;
      } else {
        text += spec[i];
      }
    }
    return parse_edge_list(text);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
  }
  return builtin_graph(spec);
}

}  // namespace geogrow
