#pragma once

#include "ngor/classify.hpp"
#include "ngor/cycle.hpp"
#include "ngor/enumerate.hpp"
#include "ngor/graph.hpp"
#include "ngor/numbers.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// Structured output. Key order is fixed (insertion order of an
// ordered_json), rationals are rendered as "a/b" strings with "/b" omitted
// for integers, and vertex-indexed maps list vertices in canonical order.

namespace ngor {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_vertex_map(const DecoratedGraph& g,
                                    const std::vector<std::int64_t>& values) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < g.size(); ++i) out[g.id(i)] = values[i];
  return out;
}

inline ordered_json json_vertex_map(const DecoratedGraph& g,
                                    const std::vector<Rational>& values) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < g.size(); ++i)
    out[g.id(i)] = to_string(values[i]);
  return out;
}

inline ordered_json to_json(const DecoratedGraph& g, const Solution& sol) {
  ordered_json out;
  out["kind"] = "solution";
  out["n"] = json_vertex_map(g, sol.n);
  out["e"] = json_vertex_map(g, sol.e);
  std::vector<std::int64_t> z(sol.n);
  for (auto& zi : z) ++zi;
  out["z"] = json_vertex_map(g, z);
  return out;
}

inline ordered_json to_json(const DecoratedGraph& g,
                            const SolutionFamily& family) {
  ordered_json out;
  out["kind"] = "family";
  out["n"] = json_vertex_map(g, family.n);
  ordered_json fixed = ordered_json::object();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (family.n[i] > 0) fixed[g.id(i)] = family.fixed_e[i];
  out["e"] = fixed;
  ordered_json free_ids = ordered_json::array();
  for (std::size_t i : family.free_vertices) free_ids.push_back(g.id(i));
  out["free"] = free_ids;
  ordered_json elements = ordered_json::array();
  for (const auto& elem : family.minimal_elements) {
    ordered_json one = ordered_json::object();
    for (std::size_t k = 0; k < family.free_vertices.size(); ++k)
      one[g.id(family.free_vertices[k])] = elem[k];
    elements.push_back(one);
  }
  out["minimal_elements"] = elements;
  out["truncated"] = family.truncated;
  std::vector<std::int64_t> z(family.n);
  for (auto& zi : z) ++zi;
  out["z"] = json_vertex_map(g, z);
  return out;
}

inline ordered_json to_json(const DecoratedGraph& g,
                            const DuValSolution& duval) {
  ordered_json out;
  out["kind"] = "du_val";
  out["e"] = json_vertex_map(g, duval.e);
  out["z"] = json_vertex_map(g, std::vector<std::int64_t>(g.size(), 0));
  return out;
}

inline ordered_json to_json(const DecoratedGraph& g,
                            const EnumerationResult& result) {
  ordered_json out;
  out["max_n"] = result.bound.max_n;
  out["exhaustive_up_to_bound"] = result.bound.exhaustive_up_to_bound;
  ordered_json solutions = ordered_json::array();
  for (const Solution& s : result.solutions) solutions.push_back(to_json(g, s));
  out["solutions"] = solutions;
  ordered_json families = ordered_json::array();
  for (const SolutionFamily& f : result.families)
    families.push_back(to_json(g, f));
  out["families"] = families;
  ordered_json duval = ordered_json::array();
  for (const DuValSolution& d : result.du_val) duval.push_back(to_json(g, d));
  out["du_val"] = duval;
  return out;
}

inline ordered_json to_json(const Classification& c) {
  ordered_json out;
  out["du_val"] = c.du_val ? ordered_json(c.du_val->label()) : ordered_json();
  out["cusp"] = c.cusp;
  out["minimal"] = c.minimal ? ordered_json(*c.minimal) : ordered_json();
  return out;
}

inline ordered_json to_json(const DecoratedGraph& g,
                            const CycleReport& report) {
  ordered_json out;
  out["z"] = json_vertex_map(g, report.z);
  out["integral"] = report.integral;
  out["effective"] = report.effective;
  out["n"] = report.n ? json_vertex_map(g, *report.n) : ordered_json();
  out["warnings"] = report.warnings;
  return out;
}

}  // namespace ngor
