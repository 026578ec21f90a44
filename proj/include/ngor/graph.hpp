#pragma once

#include "ngor/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ngor {

using VertexId = std::string;

// Edge given by vertex indices; multiplicities of repeated pairs accumulate.
struct RawEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::int64_t mult = 1;
};

enum class ViolationKind {
  NoVertices,
  DuplicateVertex,
  NegativeGenus,
  NonPositiveSelfIntersection,
  LoopEdge,
  NonPositiveMultiplicity,
  EdgeOutOfRange,
  Disconnected,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Decorated dual graph: a finite unoriented multigraph whose vertices carry
// an arithmetic genus p_i >= 0 and, optionally, a self-intersection weight
// e_i >= 1 (the weight is -E_i^2, stored positive). Vertices keep their
// first-appearance order and every vector-valued result in the library
// follows that order.
//
// Construction never validates; use validate() to obtain the list of broken
// invariants. Instances are immutable after construction and safe to share
// across threads.
class DecoratedGraph {
 public:
  DecoratedGraph(std::vector<VertexId> ids, std::vector<std::int64_t> genus,
                 std::optional<std::vector<std::int64_t>> self_intersections,
                 const std::vector<RawEdge>& edges)
      : ids_(std::move(ids)),
        p_(std::move(genus)),
        e_(std::move(self_intersections)),
        adj_(ids_.size()) {
    for (std::size_t i = 0; i < ids_.size(); ++i)
      index_.emplace(ids_[i], i);  // first occurrence wins
    for (const RawEdge& edge : edges) {
      if (edge.a >= ids_.size() || edge.b >= ids_.size()) {
        out_of_range_edges_ = true;
        continue;
      }
      add_mult(edge.a, edge.b, edge.mult);
      if (edge.a != edge.b) add_mult(edge.b, edge.a, edge.mult);
    }
    for (auto& row : adj_)
      std::sort(row.begin(), row.end());
    valency_.resize(ids_.size(), 0);
    for (std::size_t i = 0; i < ids_.size(); ++i)
      for (const auto& [j, m] : adj_[i])
        if (j != i) valency_[i] += m;
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<VertexId>& vertex_ids() const { return ids_; }
  const VertexId& id(std::size_t i) const { return ids_[i]; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::int64_t genus(std::size_t i) const { return p_[i]; }
  const std::vector<std::int64_t>& genus_values() const { return p_; }

  bool has_self_intersections() const { return e_.has_value(); }

  std::int64_t self_intersection(std::size_t i) const {
    require_weights();
    return (*e_)[i];
  }

  const std::vector<std::int64_t>& self_intersection_values() const {
    require_weights();
    return *e_;
  }

  // Multiplicity e_ij of edges between i and j (0 when non-adjacent).
  std::int64_t multiplicity(std::size_t i, std::size_t j) const {
    const auto& row = adj_[i];
    auto it = std::lower_bound(
        row.begin(), row.end(), std::make_pair(j, std::int64_t{0}),
        [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    if (it != row.end() && it->first == j) return it->second;
    return 0;
  }

  // Adjacent vertices with multiplicities, sorted by vertex index. Includes
  // a self entry only for (invalid) graphs with loops.
  const std::vector<std::pair<std::size_t, std::int64_t>>& neighbors(
      std::size_t i) const {
    return adj_[i];
  }

  // Number of edges, counted with multiplicity, joining i to other vertices.
  std::int64_t valency(std::size_t i) const { return valency_[i]; }

  std::int64_t total_edge_multiplicity() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (const auto& [j, m] : adj_[i])
        if (j > i) total += m;
    return total;
  }

  // Edges as (i, j, mult) with i <= j, sorted.
  std::vector<RawEdge> edge_list() const {
    std::vector<RawEdge> edges;
    for (std::size_t i = 0; i < size(); ++i)
      for (const auto& [j, m] : adj_[i])
        if (j >= i) edges.push_back({i, j, m});
    return edges;
  }

  DecoratedGraph with_self_intersections(std::vector<std::int64_t> e) const {
    if (e.size() != size())
      throw InvalidGraphError("self-intersection vector has wrong length");
    return DecoratedGraph(ids_, p_, std::move(e), edge_list());
  }

  DecoratedGraph without_self_intersections() const {
    return DecoratedGraph(ids_, p_, std::nullopt, edge_list());
  }

  bool connected() const {
    if (size() == 0) return false;
    std::vector<char> seen(size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, m] : adj_[u]) {
        (void)m;
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    return reached == size();
  }

  friend bool operator==(const DecoratedGraph& lhs, const DecoratedGraph& rhs) {
    return lhs.ids_ == rhs.ids_ && lhs.p_ == rhs.p_ && lhs.e_ == rhs.e_ &&
           lhs.adj_ == rhs.adj_;
  }

  bool out_of_range_edges() const { return out_of_range_edges_; }

 private:
  void require_weights() const {
    if (!e_)
      throw MissingWeightsError(
          "graph carries no self-intersection weights (no e values)");
  }

  void add_mult(std::size_t from, std::size_t to, std::int64_t m) {
    for (auto& entry : adj_[from]) {
      if (entry.first == to) {
        entry.second += m;
        return;
      }
    }
    adj_[from].emplace_back(to, m);
  }

  std::vector<VertexId> ids_;
  std::vector<std::int64_t> p_;
  std::optional<std::vector<std::int64_t>> e_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj_;
  std::vector<std::int64_t> valency_;
  std::unordered_map<VertexId, std::size_t> index_;
  bool out_of_range_edges_ = false;
};

// All broken invariants, as data. An empty result means the graph is a
// valid decorated dual graph.
inline std::vector<Violation> validate(const DecoratedGraph& g) {
  std::vector<Violation> out;
  if (g.size() == 0) {
    out.push_back({ViolationKind::NoVertices, "graph has no vertices"});
    return out;
  }
  {
    std::unordered_map<VertexId, int> counts;
    for (const auto& id : g.vertex_ids()) ++counts[id];
    for (const auto& id : g.vertex_ids()) {
      auto it = counts.find(id);
      if (it != counts.end() && it->second > 1) {
        out.push_back({ViolationKind::DuplicateVertex,
                       "duplicate vertex '" + id + "'"});
        counts.erase(it);
      }
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.genus(i) < 0)
      out.push_back({ViolationKind::NegativeGenus,
                     "vertex '" + g.id(i) + "' has negative genus"});
    if (g.has_self_intersections() && g.self_intersection(i) < 1)
      out.push_back(
          {ViolationKind::NonPositiveSelfIntersection,
           "vertex '" + g.id(i) + "' has non-positive self-intersection weight"});
    for (const auto& [j, m] : g.neighbors(i)) {
      if (j == i)
        out.push_back(
            {ViolationKind::LoopEdge, "loop edge at vertex '" + g.id(i) + "'"});
      if (m < 1 && j >= i)
        out.push_back({ViolationKind::NonPositiveMultiplicity,
                       "non-positive multiplicity between '" + g.id(i) +
                           "' and '" + g.id(j) + "'"});
    }
  }
  if (g.out_of_range_edges())
    out.push_back({ViolationKind::EdgeOutOfRange,
                   "edge references a vertex index out of range"});
  if (!g.connected())
    out.push_back({ViolationKind::Disconnected, "graph is not connected"});
  return out;
}

inline void require_valid(const DecoratedGraph& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid graph:";
  for (const auto& v : violations) msg += " " + v.message + ";";
  msg.pop_back();
  throw InvalidGraphError(msg);
}

// Derived vertex weights: the valency v_i and q_i = v_i + 2 p_i - 2. For
// any decorated graph q_i >= -2, with equality exactly for an isolated
// rational vertex.
struct DerivedWeights {
  std::vector<std::int64_t> valency;
  std::vector<std::int64_t> q;
};

inline DerivedWeights derived_weights(const DecoratedGraph& g) {
  DerivedWeights w;
  w.valency.resize(g.size());
  w.q.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    w.valency[i] = g.valency(i);
    w.q[i] = w.valency[i] + 2 * g.genus(i) - 2;
  }
  return w;
}

// A resolution graph is minimal when no vertex has p = 0 and e = 1
// (no contractible (-1)-curve).
inline bool is_minimal(const DecoratedGraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.genus(i) == 0 && g.self_intersection(i) == 1) return false;
  return true;
}

}  // namespace ngor
