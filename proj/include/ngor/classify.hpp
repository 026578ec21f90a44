#pragma once

#include "ngor/cycle.hpp"
#include "ngor/errors.hpp"
#include "ngor/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ngor {

// One of the five Du Val (ADE) tree shapes.
struct DuValTag {
  char series;  // 'A', 'D' or 'E'
  int rank;

  std::string label() const { return std::string(1, series) + std::to_string(rank); }

  friend bool operator==(const DuValTag& a, const DuValTag& b) {
    return a.series == b.series && a.rank == b.rank;
  }
};

namespace classify_detail {

// True when the multigraph is a simple tree (all multiplicities 1, no
// loops, connected, |E| = |V| - 1).
inline bool simple_tree(const DecoratedGraph& g) {
  if (!g.connected()) return false;
  std::int64_t edge_count = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& [j, m] : g.neighbors(i)) {
      if (j == i) return false;
      if (j > i) {
        if (m != 1) return false;
        ++edge_count;
      }
    }
  return edge_count == static_cast<std::int64_t>(g.size()) - 1;
}

// Arm lengths of a tree with exactly one degree-3 vertex, sorted.
inline std::optional<std::array<std::int64_t, 3>> fork_arms(
    const DecoratedGraph& g, std::size_t fork) {
  std::array<std::int64_t, 3> arms{};
  int arm = 0;
  for (const auto& [start, m] : g.neighbors(fork)) {
    (void)m;
    std::int64_t length = 1;
    std::size_t prev = fork;
    std::size_t cur = start;
    while (g.neighbors(cur).size() == 2) {
      const auto& nb = g.neighbors(cur);
      std::size_t next = nb[0].first == prev ? nb[1].first : nb[0].first;
      prev = cur;
      cur = next;
      ++length;
    }
    if (g.neighbors(cur).size() != 1) return std::nullopt;  // second fork
    arms[arm++] = length;
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace classify_detail

// Recognizes the tree shapes A_k, D_k, E6, E7, E8 from the graph alone
// (genera and weights are ignored). A_1 is the single vertex.
inline std::optional<DuValTag> ade_shape(const DecoratedGraph& g) {
  using namespace classify_detail;
  if (g.size() == 0 || !simple_tree(g)) return std::nullopt;

  std::size_t forks = 0, fork = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::size_t deg = g.neighbors(i).size();
    if (deg > 3) return std::nullopt;
    if (deg == 3) {
      ++forks;
      fork = i;
    }
  }
  int rank = static_cast<int>(g.size());
  if (forks == 0) return DuValTag{'A', rank};  // a path
  if (forks != 1) return std::nullopt;

  auto arms = fork_arms(g, fork);
  if (!arms) return std::nullopt;
  const auto& [a, b, c] = *arms;
  if (a == 1 && b == 1) return DuValTag{'D', rank};  // arms (1, 1, rank-3)
  if (a == 1 && b == 2 && c == 2) return DuValTag{'E', 6};
  if (a == 1 && b == 2 && c == 3) return DuValTag{'E', 7};
  if (a == 1 && b == 2 && c == 4) return DuValTag{'E', 8};
  return std::nullopt;
}

// Homeomorphic to a circle: every vertex has valency exactly 2 (counting
// multiplicity). Covers simple cycles of length >= 3 and the two-vertex
// double edge; a single vertex would need a loop, which is excluded.
inline bool is_circle(const DecoratedGraph& g) {
  if (g.size() < 2 || !g.connected()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.valency(i) != 2) return false;
  return true;
}

// Cusp graph: a circle with all genera zero.
inline bool is_cusp_graph(const DecoratedGraph& g) {
  if (!is_circle(g)) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.genus(i) != 0) return false;
  return true;
}

struct Classification {
  // Set when all p = 0, all e = 2 and the shape is one of the five trees.
  std::optional<DuValTag> du_val;
  bool cusp = false;
  // Present only when the graph carries self-intersection weights.
  std::optional<bool> minimal;
};

inline Classification classify(const DecoratedGraph& g) {
  Classification out;
  out.cusp = is_cusp_graph(g);
  if (g.has_self_intersections()) {
    out.minimal = is_minimal(g);
    bool all_p0_e2 = true;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.genus(i) != 0 || g.self_intersection(i) != 2) all_p0_e2 = false;
    if (all_p0_e2) out.du_val = ade_shape(g);
  }
  return out;
}

// Trichotomy for a vertex with n = 0 in a solution of the adjunction
// system: since 0 = v_i + 2 p_i - 2 + sum e_ij n_j with all terms
// non-negative, the vertex has valency at most 2 and one of three shapes.
enum class ZeroCase {
  CuspAllZero,       // valency 2: the whole graph is a cusp with n = 0
  ValencyOne,        // leaf with p = 0; the unique neighbor has n = 1
  IsolatedElliptic,  // isolated vertex with p = 1
};

struct ZeroVertexCase {
  std::size_t vertex;
  ZeroCase kind;
};

// Analyzes every vertex with n_i = 0 of a solution (n, e); e is taken from
// the graph. The input must have zero adjunction residual. Violations of
// the trichotomy cannot come from input, so they raise InternalError.
inline std::vector<ZeroVertexCase> zero_n_analysis(const DecoratedGraph& g,
                                                   const Cycle& n) {
  for (const Integer& r : adjunction_residual(g, n))
    if (r != 0)
      throw Error("zero_n_analysis requires a solution with zero residual");

  std::vector<ZeroVertexCase> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (n[i] != 0) continue;
    std::int64_t v = g.valency(i);
    if (v > 2)
      throw InternalError("zero-coefficient vertex with valency > 2");
    if (v == 2) {
      if (g.genus(i) != 0)
        throw InternalError("zero-coefficient valency-2 vertex with p != 0");
      if (!is_cusp_graph(g))
        throw InternalError("zero-coefficient valency-2 vertex outside a cusp graph");
      for (std::size_t j = 0; j < g.size(); ++j)
        if (n[j] != 0)
          throw InternalError("cusp graph solution with a nonzero coefficient");
      out.push_back({i, ZeroCase::CuspAllZero});
    } else if (v == 1) {
      if (g.genus(i) != 0)
        throw InternalError("zero-coefficient leaf with p != 0");
      const auto& nb = g.neighbors(i);
      if (nb.size() != 1 || nb[0].second != 1)
        throw InternalError("zero-coefficient leaf without a unique neighbor");
      if (n[nb[0].first] != 1)
        throw InternalError("zero-coefficient leaf whose neighbor has n != 1");
      out.push_back({i, ZeroCase::ValencyOne});
    } else {
      if (g.genus(i) != 1)
        throw InternalError("isolated zero-coefficient vertex with p != 1");
      out.push_back({i, ZeroCase::IsolatedElliptic});
    }
  }
  return out;
}

}  // namespace ngor
