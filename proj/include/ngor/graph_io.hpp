#pragma once

#include "ngor/errors.hpp"
#include "ngor/graph.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace ngor {

// Graph file format (UTF-8, line oriented):
//
//   # comment                      comments and blank lines are ignored
//   v <id> <p>                     vertex with genus p >= 0
//   v <id> <p> e=<e>               ... plus self-intersection weight e >= 1
//   e <id1> <id2>                  edge of multiplicity 1
//   e <id1> <id2> m=<mult>         edge of multiplicity mult >= 1
//
// Vertex ids are arbitrary whitespace-free tokens. A vertex line must
// appear before any edge that references it. Repeated edge lines for the
// same pair accumulate multiplicity. Either every vertex carries an e
// value or none does.

namespace io_detail {

struct Token {
  std::string text;
  int column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
  }
  return out;
}

inline std::int64_t parse_int(const Token& tok, int line,
                              const std::string& what) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, tok.column, "expected " + what + ", got '" +
                                           tok.text + "'");
  return value;
}

}  // namespace io_detail

inline DecoratedGraph parse_graph(std::istream& in) {
  using io_detail::Token;
  using io_detail::parse_int;
  using io_detail::tokenize;

  std::vector<VertexId> ids;
  std::vector<std::int64_t> genus;
  std::vector<std::int64_t> weights;  // parallel to ids when weighted
  std::vector<RawEdge> edges;
  bool saw_weight = false;
  bool saw_unweighted = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;

    if (tokens[0].text == "v") {
      if (tokens.size() != 3 && tokens.size() != 4)
        throw ParseError(lineno, tokens[0].column,
                         "vertex line must be 'v <id> <p>' or 'v <id> <p> e=<e>'");
      const std::string& id = tokens[1].text;
      for (const auto& existing : ids)
        if (existing == id)
          throw ParseError(lineno, tokens[1].column,
                           "duplicate vertex '" + id + "'");
      std::int64_t p = parse_int(tokens[2], lineno, "a genus (integer >= 0)");
      if (p < 0)
        throw ParseError(lineno, tokens[2].column, "genus must be >= 0");
      bool has_e = tokens.size() == 4;
      std::int64_t e = 0;
      if (has_e) {
        const Token& t = tokens[3];
        if (t.text.rfind("e=", 0) != 0)
          throw ParseError(lineno, t.column, "expected 'e=<weight>'");
        Token value{t.text.substr(2), t.column + 2};
        e = parse_int(value, lineno, "a self-intersection weight");
        if (e < 1)
          throw ParseError(lineno, value.column,
                           "self-intersection weight must be >= 1");
      }
      if (has_e && saw_unweighted)
        throw ParseError(lineno, tokens[3].column,
                         "self-intersection weights must be given on all "
                         "vertices or none");
      if (!has_e && saw_weight)
        throw ParseError(lineno, tokens[1].column,
                         "self-intersection weights must be given on all "
                         "vertices or none");
      saw_weight = saw_weight || has_e;
      saw_unweighted = saw_unweighted || !has_e;
      ids.push_back(id);
      genus.push_back(p);
      if (has_e) weights.push_back(e);
    } else if (tokens[0].text == "e") {
      if (tokens.size() != 3 && tokens.size() != 4)
        throw ParseError(lineno, tokens[0].column,
                         "edge line must be 'e <id1> <id2>' or 'e <id1> <id2> m=<mult>'");
      auto find = [&](const Token& t) -> std::size_t {
        for (std::size_t i = 0; i < ids.size(); ++i)
          if (ids[i] == t.text) return i;
        throw ParseError(lineno, t.column,
                         "edge references unknown vertex '" + t.text + "'");
      };
      std::size_t a = find(tokens[1]);
      std::size_t b = find(tokens[2]);
      if (a == b)
        throw ParseError(lineno, tokens[2].column,
                         "loop edge at vertex '" + tokens[1].text + "'");
      std::int64_t mult = 1;
      if (tokens.size() == 4) {
        const Token& t = tokens[3];
        if (t.text.rfind("m=", 0) != 0)
          throw ParseError(lineno, t.column, "expected 'm=<mult>'");
        Token value{t.text.substr(2), t.column + 2};
        mult = parse_int(value, lineno, "an edge multiplicity");
        if (mult < 1)
          throw ParseError(lineno, value.column,
                           "edge multiplicity must be >= 1");
      }
      edges.push_back({a, b, mult});
    } else {
      throw ParseError(lineno, tokens[0].column,
                       "unknown directive '" + tokens[0].text +
                           "' (expected 'v', 'e' or '#')");
    }
  }

  if (ids.empty()) throw ParseError(0, 0, "graph has no vertices");

  std::optional<std::vector<std::int64_t>> e;
  if (saw_weight) e = std::move(weights);
  DecoratedGraph g(std::move(ids), std::move(genus), std::move(e), edges);
  if (!g.connected()) throw ParseError(0, 0, "graph is not connected");
  return g;
}

inline DecoratedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

// Canonical text form; parse_graph(serialize_graph(g)) == g for valid graphs.
inline std::string serialize_graph(const DecoratedGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "v " << g.id(i) << " " << g.genus(i);
    if (g.has_self_intersections()) out << " e=" << g.self_intersection(i);
    out << "\n";
  }
  for (const RawEdge& edge : g.edge_list()) {
    out << "e " << g.id(edge.a) << " " << g.id(edge.b);
    if (edge.mult != 1) out << " m=" << edge.mult;
    out << "\n";
  }
  return out.str();
}

// Graphviz rendering with p (and e when present) as vertex labels and
// multiplicities as edge labels. Node order follows the canonical order.
inline std::string to_dot(const DecoratedGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '\\';
      out += c;
    }
    out += "\"";
    return out;
  };
  std::ostringstream out;
  out << "graph resolution {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "  " << quote(g.id(i)) << " [label=" << quote([&] {
      std::string label = g.id(i) + "\\np=" + std::to_string(g.genus(i));
      if (g.has_self_intersections())
        label += " e=" + std::to_string(g.self_intersection(i));
      return label;
    }()) << "];\n";
  }
  for (const RawEdge& edge : g.edge_list()) {
    out << "  " << quote(g.id(edge.a)) << " -- " << quote(g.id(edge.b))
        << " [label=\"" << edge.mult << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ngor
