#pragma once

#include "ngor/classify.hpp"
#include "ngor/cycle.hpp"
#include "ngor/errors.hpp"
#include "ngor/graph.hpp"
#include "ngor/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace ngor {

struct EnumerationConfig {
  // Search box for the shifted coefficients n = z - 1. The full solution
  // set is known to be finite, but no effective bound is available, so
  // results are exhaustive up to this bound and say so.
  std::int64_t max_n = 64;
  // Probe cap when computing minimal free weights of a family.
  std::int64_t max_e_probe = 16;
  // Enforce e_i >= 2 wherever p_i = 0 (minimal resolution graphs).
  bool require_minimal = true;
  // Report the all-2 Du Val weighting (z = 0) on ADE shapes with all p = 0.
  bool include_du_val = true;
  // Worker threads for the candidate search; output is identical for any
  // job count.
  unsigned jobs = 1;

  void validate() const {
    if (max_n < 1) throw Error("max_n must be >= 1");
    if (max_n > 1'000'000'000) throw Error("max_n too large");
    if (max_e_probe < 3) throw Error("max_e_probe must be >= 3");
    if (max_e_probe > 1'000'000) throw Error("max_e_probe too large");
    if (jobs < 1) throw Error("jobs must be >= 1");
  }
};

// A full solution (n, e) of the adjunction system with negative definite
// intersection form. All n_i > 0, so every e_i is forced.
struct Solution {
  Cycle n;
  std::vector<std::int64_t> e;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.n == b.n && a.e == b.e;
  }
  friend bool operator<(const Solution& a, const Solution& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.e < b.e;
  }
};

// The all-2 weighting on an ADE shape (anti-canonical cycle 0); it sits
// outside the n-parameterization, which covers only z >= 1.
struct DuValSolution {
  std::vector<std::int64_t> e;
};

// A solution skeleton with free vertices: those with n_i = 0, whose weight
// never enters the adjunction system. The admissible free assignments form
// an upward-closed set (raising a weight preserves negative definiteness),
// so the antichain of minimal elements describes the family completely: a
// member is any assignment coordinate-wise >= some minimal element.
struct SolutionFamily {
  Cycle n;
  std::vector<std::int64_t> fixed_e;           // meaningful where n_i > 0
  std::vector<std::size_t> free_vertices;      // ascending vertex index
  std::vector<std::vector<std::int64_t>> minimal_elements;
  // A minimal assignment may exceed the probe cap; when that is possible
  // the antichain above is incomplete and this flag is set.
  bool truncated = false;

  Solution member(const std::vector<std::int64_t>& assignment) const {
    Solution s;
    s.n = n;
    s.e = fixed_e;
    for (std::size_t k = 0; k < free_vertices.size(); ++k)
      s.e[free_vertices[k]] = assignment[k];
    return s;
  }
};

struct BoundCertificate {
  std::int64_t max_n = 0;
  bool exhaustive_up_to_bound = true;
};

struct EnumerationResult {
  std::vector<Solution> solutions;
  std::vector<SolutionFamily> families;
  std::vector<DuValSolution> du_val;
  BoundCertificate bound;

  bool empty() const {
    return solutions.empty() && families.empty() && du_val.empty();
  }
};

namespace enum_detail {

inline std::int64_t floor_weight(const DecoratedGraph& g, std::size_t i,
                                 bool require_minimal) {
  return (require_minimal && g.genus(i) == 0) ? 2 : 1;
}

// Shared read-only search data.
struct SearchContext {
  const DecoratedGraph& g;
  std::int64_t max_n;
  bool require_minimal;
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> floor_e;
  std::vector<char> zero_allowed;
  std::vector<std::size_t> order;  // decreasing valency, ties by index

  SearchContext(const DecoratedGraph& graph, const EnumerationConfig& cfg)
      : g(graph), max_n(cfg.max_n), require_minimal(cfg.require_minimal) {
    DerivedWeights w = derived_weights(g);
    q = std::move(w.q);
    floor_e.resize(g.size());
    zero_allowed.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      floor_e[i] = floor_weight(g, i, require_minimal);
      std::int64_t v = g.valency(i), p = g.genus(i);
      // n_i = 0 needs v_i + 2 p_i - 2 + sum e_ij n_j = 0 over non-negative
      // terms; only three vertex shapes can satisfy it.
      zero_allowed[i] = (v == 2 && p == 0) || (v == 1 && p == 0) ||
                        (v == 0 && p == 1);
    }
    order.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (g.valency(a) != g.valency(b)) return g.valency(a) > g.valency(b);
      return a < b;
    });
  }
};

// Depth-first enumeration of every n in [0, max_n]^V passing the
// per-vertex screen: S_i := q_i + sum_j e_ij n_j must vanish when n_i = 0
// and must be a multiple of n_i with quotient >= floor_e otherwise.
// Assigning n_i = 0 immediately ties the neighbors (all 0, or the unique
// neighbor to 1), which prunes hard before any divisibility is checked.
class CandidateSearch {
 public:
  CandidateSearch(const SearchContext& ctx,
                  std::function<void(const Cycle&)> emit)
      : ctx_(ctx),
        emit_(std::move(emit)),
        n_(ctx.g.size(), -1),
        forced_(ctx.g.size(), -1),
        checked_(ctx.g.size(), 0) {}

  // Restricts the root vertex (first in the search order) to values in
  // [root_lo, root_hi]; pass 0..max_n for the full search.
  void run(std::int64_t root_lo, std::int64_t root_hi) {
    root_lo_ = root_lo;
    root_hi_ = root_hi;
    if (ctx_.g.size() == 0) return;
    dfs(0);
  }

 private:
  void dfs(std::size_t t) {
    if (t == ctx_.order.size()) {
      emit_(n_);
      return;
    }
    std::size_t u = ctx_.order[t];
    if (forced_[u] >= 0) {
      try_value(t, u, forced_[u]);
      return;
    }
    if (ctx_.zero_allowed[u]) try_value(t, u, 0);
    for (std::int64_t v = 1; v <= ctx_.max_n; ++v) try_value(t, u, v);
  }

  void try_value(std::size_t t, std::size_t u, std::int64_t value) {
    if (t == 0 && (value < root_lo_ || value > root_hi_)) return;
    std::size_t forced_mark = forced_trail_.size();
    std::size_t checked_mark = checked_trail_.size();
    n_[u] = value;
    if (propagate(u) && check_ready_around(u)) dfs(t + 1);
    while (forced_trail_.size() > forced_mark) {
      forced_[forced_trail_.back()] = -1;
      forced_trail_.pop_back();
    }
    while (checked_trail_.size() > checked_mark) {
      checked_[checked_trail_.back()] = 0;
      checked_trail_.pop_back();
    }
    n_[u] = -1;
  }

  bool force(std::size_t j, std::int64_t value) {
    if (n_[j] >= 0) return n_[j] == value;
    if (forced_[j] >= 0) return forced_[j] == value;
    if (value == 0 && !ctx_.zero_allowed[j]) return false;
    if (value > ctx_.max_n) return false;
    forced_[j] = value;
    forced_trail_.push_back(j);
    return true;
  }

  bool propagate(std::size_t u) {
    if (n_[u] != 0) return true;
    std::int64_t v = ctx_.g.valency(u);
    if (v == 2 && ctx_.g.genus(u) == 0) {
      for (const auto& [j, m] : ctx_.g.neighbors(u)) {
        (void)m;
        if (!force(j, 0)) return false;
      }
    } else if (v == 1) {
      if (!force(ctx_.g.neighbors(u)[0].first, 1)) return false;
    }
    return true;
  }

  bool check_ready_around(std::size_t u) {
    if (!maybe_check(u)) return false;
    for (const auto& [j, m] : ctx_.g.neighbors(u)) {
      (void)m;
      if (!maybe_check(j)) return false;
    }
    return true;
  }

  bool maybe_check(std::size_t k) {
    if (checked_[k] || n_[k] < 0) return true;
    for (const auto& [j, m] : ctx_.g.neighbors(k)) {
      (void)m;
      if (n_[j] < 0) return true;  // not ready yet
    }
    checked_[k] = 1;
    checked_trail_.push_back(k);
    return check_vertex(k);
  }

  bool check_vertex(std::size_t k) {
    std::int64_t s = ctx_.q[k];
    for (const auto& [j, m] : ctx_.g.neighbors(k)) s += m * n_[j];
    if (n_[k] == 0) return s == 0;
    if (s < ctx_.floor_e[k] * n_[k]) return false;
    return s % n_[k] == 0;
  }

  const SearchContext& ctx_;
  std::function<void(const Cycle&)> emit_;
  std::vector<std::int64_t> n_;
  std::vector<std::int64_t> forced_;
  std::vector<char> checked_;
  std::vector<std::size_t> forced_trail_;
  std::vector<std::size_t> checked_trail_;
  std::int64_t root_lo_ = 0;
  std::int64_t root_hi_ = 0;
};

inline void check_search_bounds(const DecoratedGraph& g,
                                const EnumerationConfig& cfg) {
  std::int64_t vmax = 0, pmax = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    vmax = std::max(vmax, g.valency(i));
    pmax = std::max(pmax, g.genus(i));
  }
  // The screen works in 64-bit arithmetic; emitted results are re-verified
  // in exact arithmetic afterwards.
  if (vmax > 0 && cfg.max_n > (1LL << 50) / vmax)
    throw Error("search bounds too large for 64-bit screening");
  if (pmax > (1LL << 50))
    throw Error("genus too large for 64-bit screening");
}

}  // namespace enum_detail

// Streams, in deterministic order, every candidate n in [0, max_n]^V
// satisfying the arithmetic screen of the adjunction system (zero rows
// balanced, positive rows divisible with quotient above the weight floor).
// Negative definiteness is not tested here.
inline void for_each_candidate_n(const DecoratedGraph& g,
                                 const EnumerationConfig& cfg,
                                 const std::function<void(const Cycle&)>& fn) {
  cfg.validate();
  enum_detail::check_search_bounds(g, cfg);
  enum_detail::SearchContext ctx(g, cfg);
  enum_detail::CandidateSearch search(ctx, fn);
  search.run(0, cfg.max_n);
}

inline std::vector<Cycle> candidate_n_vectors(const DecoratedGraph& g,
                                              const EnumerationConfig& cfg) {
  cfg.validate();
  enum_detail::check_search_bounds(g, cfg);
  enum_detail::SearchContext ctx(g, cfg);

  unsigned jobs = cfg.jobs;
  if (jobs <= 1 || g.size() == 0 || cfg.max_n < 8) {
    std::vector<Cycle> out;
    enum_detail::CandidateSearch search(ctx, [&](const Cycle& n) {
      out.push_back(n);
    });
    search.run(0, cfg.max_n);
    return out;
  }

  // Fan out over contiguous root-value ranges; concatenation in range
  // order reproduces the sequential order exactly.
  std::int64_t total = cfg.max_n + 1;
  unsigned workers = static_cast<unsigned>(
      std::min<std::int64_t>(jobs, total));
  std::vector<std::vector<Cycle>> buckets(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::int64_t lo = total * w / workers;
    std::int64_t hi = total * (w + 1) / workers - 1;
    threads.emplace_back([&, w, lo, hi] {
      enum_detail::CandidateSearch search(ctx, [&buckets, w](const Cycle& n) {
        buckets[w].push_back(n);
      });
      search.run(lo, hi);
    });
  }
  for (auto& t : threads) t.join();

  std::vector<Cycle> out;
  for (auto& bucket : buckets)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

struct MinimalFreeWeights {
  std::vector<std::vector<std::int64_t>> elements;  // antichain over free set
  bool truncated = false;
  // No assignment works, however large: the principal submatrix on the
  // non-free vertices is already not negative definite.
  bool provably_empty = false;
};

namespace enum_detail {

// Membership search over the free-weight lattice. A coordinate value of
// cap+1 is a sentinel meaning "arbitrarily large": the row and column are
// dropped, which is the limit of raising that weight. Membership is
// monotone in every coordinate (raising a weight adds a negative
// semidefinite perturbation; dropping to the limit passes to a principal
// submatrix), so the admissible set is upward closed and is described by
// its minimal elements. Minimal elements containing the sentinel witness
// family content beyond the probe cap.
class FreeWeightProbe {
 public:
  FreeWeightProbe(const DecoratedGraph& g,
                  const std::vector<std::int64_t>& fixed_e,
                  const std::vector<std::size_t>& free_vertices,
                  std::int64_t cap, bool require_minimal)
      : g_(g), fixed_e_(fixed_e), free_(free_vertices), cap_(cap) {
    floors_.resize(free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k)
      floors_[k] = floor_weight(g, free_[k], require_minimal);
    vals_.resize(free_.size());
    is_free_.assign(g.size(), -1);
    for (std::size_t k = 0; k < free_.size(); ++k)
      is_free_[free_[k]] = static_cast<std::int64_t>(k);
  }

  // All minimal members of the extended lattice, last coordinate recursed
  // first. Elements are assignments over the free set in free-vertex order.
  std::vector<std::vector<std::int64_t>> run() { return minimals(free_.size()); }

  std::int64_t sentinel() const { return cap_ + 1; }
  const std::vector<std::int64_t>& floors() const { return floors_; }

 private:
  static bool dominated(const std::vector<std::int64_t>& y,
                        const std::vector<std::vector<std::int64_t>>& antichain) {
    for (const auto& a : antichain) {
      bool le = true;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > y[i]) {
          le = false;
          break;
        }
      if (le) return true;
    }
    return false;
  }

  bool is_floor_prefix(const std::vector<std::int64_t>& y,
                       std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (y[i] != floors_[i]) return false;
    return true;
  }

  std::vector<std::vector<std::int64_t>> minimals(std::size_t d) {
    std::vector<std::vector<std::int64_t>> result;
    if (d == 0) {
      if (member()) result.push_back({});
      return result;
    }
    std::vector<std::vector<std::int64_t>> prev;
    for (std::int64_t t = floors_[d - 1]; t <= sentinel(); ++t) {
      vals_[d - 1] = t;
      auto slice = minimals(d - 1);
      for (auto& y : slice) {
        if (t == floors_[d - 1] || !dominated(y, prev)) {
          auto elem = y;
          elem.push_back(t);
          result.push_back(std::move(elem));
        }
      }
      // Once the slice floor itself is a member, larger values of this
      // coordinate contribute nothing new.
      bool saturated = slice.size() == 1 && is_floor_prefix(slice[0], d - 1);
      prev = std::move(slice);
      if (saturated) break;
    }
    return result;
  }

  bool member() const {
    std::vector<std::size_t> kept;
    kept.reserve(g_.size());
    for (std::size_t i = 0; i < g_.size(); ++i) {
      std::int64_t k = is_free_[i];
      if (k >= 0 && vals_[static_cast<std::size_t>(k)] > cap_) continue;
      kept.push_back(i);
    }
    IntMatrix m(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
      std::size_t i = kept[a];
      std::int64_t k = is_free_[i];
      m(a, a) = -(k >= 0 ? vals_[static_cast<std::size_t>(k)] : fixed_e_[i]);
      for (std::size_t b = a + 1; b < kept.size(); ++b) {
        std::int64_t mult = g_.multiplicity(i, kept[b]);
        m(a, b) = mult;
        m(b, a) = mult;
      }
    }
    return is_negative_definite(m);
  }

  const DecoratedGraph& g_;
  const std::vector<std::int64_t>& fixed_e_;
  const std::vector<std::size_t>& free_;
  std::int64_t cap_;
  std::vector<std::int64_t> floors_;
  std::vector<std::int64_t> vals_;
  std::vector<std::int64_t> is_free_;
};

}  // namespace enum_detail

// Minimal elements, within the probe cap, of the upward-closed set of free
// weight assignments that make the whole intersection form negative
// definite. fixed_e must hold the forced weights of the non-free vertices.
inline MinimalFreeWeights minimal_free_weights(
    const DecoratedGraph& g, const std::vector<std::int64_t>& fixed_e,
    const std::vector<std::size_t>& free_vertices,
    const EnumerationConfig& cfg) {
  cfg.validate();
  enum_detail::FreeWeightProbe probe(g, fixed_e, free_vertices,
                                     cfg.max_e_probe, cfg.require_minimal);
  auto raw = probe.run();

  MinimalFreeWeights out;
  if (raw.empty()) {
    out.provably_empty = true;
    return out;
  }
  for (auto& elem : raw) {
    bool beyond_cap = false;
    for (std::int64_t v : elem)
      if (v == probe.sentinel()) beyond_cap = true;
    if (beyond_cap)
      out.truncated = true;
    else
      out.elements.push_back(std::move(elem));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// Completes a screened candidate n to solutions. Vertices with n_i > 0
// receive the forced weight S_i / n_i; with no zero vertex the result is a
// Solution exactly when the forced form is negative definite, otherwise
// the zero vertices span a family. Returns nothing when the candidate
// admits no negative definite completion.
inline std::optional<std::variant<Solution, SolutionFamily>> solutions_for_n(
    const DecoratedGraph& g, const Cycle& n, const EnumerationConfig& cfg) {
  if (n.size() != g.size()) throw Error("candidate has wrong length");
  cfg.validate();
  DerivedWeights w = derived_weights(g);

  std::vector<std::int64_t> e(g.size(), 0);
  std::vector<std::size_t> free_vertices;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (n[i] < 0) throw Error("candidate has a negative coefficient");
    Integer s = w.q[i];
    for (const auto& [j, m] : g.neighbors(i)) s += Integer(m) * n[j];
    if (n[i] == 0) {
      if (s != 0) return std::nullopt;
      free_vertices.push_back(i);
      continue;
    }
    if (s % n[i] != 0) return std::nullopt;
    Integer forced = s / n[i];
    if (forced < enum_detail::floor_weight(g, i, cfg.require_minimal))
      return std::nullopt;
    if (forced > std::numeric_limits<std::int64_t>::max())
      throw Error("forced self-intersection weight exceeds 64-bit range");
    e[i] = forced.convert_to<std::int64_t>();
  }

  if (free_vertices.empty()) {
    DecoratedGraph weighted = g.with_self_intersections(e);
    if (!is_negative_definite(intersection_matrix(weighted)))
      return std::nullopt;
    return Solution{n, std::move(e)};
  }

  MinimalFreeWeights mw = minimal_free_weights(g, e, free_vertices, cfg);
  if (mw.provably_empty) return std::nullopt;
  SolutionFamily family;
  family.n = n;
  family.fixed_e = std::move(e);
  family.free_vertices = std::move(free_vertices);
  family.minimal_elements = std::move(mw.elements);
  family.truncated = mw.truncated;
  return family;
}

// Members of a family with every free weight in [floor, max_e]: exactly
// the box assignments dominating some minimal element.
inline std::vector<Solution> family_box_section(const SolutionFamily& family,
                                                std::int64_t max_e) {
  std::vector<Solution> out;
  for (std::size_t i = 0; i < family.n.size(); ++i)
    if (family.n[i] > 0 && family.fixed_e[i] > max_e) return out;

  const std::size_t k = family.free_vertices.size();
  if (family.minimal_elements.empty()) return out;
  std::vector<std::int64_t> lower(k);
  for (std::size_t i = 0; i < k; ++i) {
    lower[i] = family.minimal_elements[0][i];
    for (const auto& elem : family.minimal_elements)
      lower[i] = std::min(lower[i], elem[i]);
  }
  std::vector<std::int64_t> assignment = lower;
  while (true) {
    bool dominated = false;
    for (const auto& elem : family.minimal_elements) {
      bool le = true;
      for (std::size_t i = 0; i < k; ++i)
        if (elem[i] > assignment[i]) {
          le = false;
          break;
        }
      if (le) {
        dominated = true;
        break;
      }
    }
    if (dominated) out.push_back(family.member(assignment));
    // odometer
    std::size_t pos = 0;
    while (pos < k && ++assignment[pos] > max_e) {
      assignment[pos] = lower[pos];
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace enum_detail {

inline void verify_solution(const DecoratedGraph& g, const Solution& sol) {
  DecoratedGraph weighted = g.with_self_intersections(sol.e);
  for (const Integer& r : adjunction_residual(weighted, sol.n))
    if (r != 0) throw InternalError("emitted solution has nonzero residual");
  CycleReport report = anticanonical_cycle(weighted);  // checks definiteness
  if (!report.integral || !report.n || *report.n != sol.n)
    throw InternalError("emitted solution does not reproduce z = n + 1");
}

}  // namespace enum_detail

// Full enumeration for (graph, p): every solution of the adjunction system
// with negative definite form and n within [0, max_n]^V, families reported
// in closed form, and the Du Val weighting when applicable. Any
// self-intersection weights already present on the graph are ignored.
// Every emitted entry is re-verified through the exact cycle and matrix
// routines before being returned.
inline EnumerationResult enumerate_weights(const DecoratedGraph& g,
                                           const EnumerationConfig& cfg = {}) {
  require_valid(g);
  cfg.validate();

  EnumerationResult result;
  result.bound = {cfg.max_n, true};

  for (const Cycle& n : candidate_n_vectors(g, cfg)) {
    auto completed = solutions_for_n(g, n, cfg);
    if (!completed) continue;
    if (std::holds_alternative<Solution>(*completed))
      result.solutions.push_back(std::get<Solution>(std::move(*completed)));
    else
      result.families.push_back(
          std::get<SolutionFamily>(std::move(*completed)));
  }

  if (cfg.include_du_val) {
    bool all_p0 = true;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.genus(i) != 0) all_p0 = false;
    if (all_p0 && ade_shape(g)) {
      std::vector<std::int64_t> e(g.size(), 2);
      DecoratedGraph weighted = g.with_self_intersections(e);
      CycleReport report = anticanonical_cycle(weighted);
      for (const Rational& zi : report.z)
        if (zi != 0) throw InternalError("Du Val weighting with nonzero z");
      result.du_val.push_back({std::move(e)});
    }
  }

  for (const Solution& sol : result.solutions)
    enum_detail::verify_solution(g, sol);
  for (const SolutionFamily& family : result.families)
    for (const auto& elem : family.minimal_elements)
      enum_detail::verify_solution(g, family.member(elem));

  std::sort(result.solutions.begin(), result.solutions.end());
  std::sort(result.families.begin(), result.families.end(),
            [](const SolutionFamily& a, const SolutionFamily& b) {
              return a.n < b.n;
            });
  return result;
}

// Independent ground truth for small instances: walks the whole box
// n in [0, max_n]^V, e in [1, max_e]^V testing the adjunction equations
// vertex by vertex (with early exit) and the definiteness of survivors.
// Shares no code with the candidate search or the family machinery.
inline std::vector<Solution> brute_force_oracle(const DecoratedGraph& g,
                                                std::int64_t max_n,
                                                std::int64_t max_e,
                                                bool require_minimal = true,
                                                double box_guard = 1e9) {
  require_valid(g);
  if (max_n < 0 || max_e < 1) throw Error("oracle bounds must be positive");
  const std::size_t v = g.size();
  double box = 1;
  for (std::size_t i = 0; i < v; ++i)
    box *= static_cast<double>(max_n + 1) * static_cast<double>(max_e);
  if (box > box_guard) throw BoxTooLargeError("oracle box too large");

  DerivedWeights w = derived_weights(g);
  std::vector<Solution> out;
  Cycle n(v, 0);

  auto scan_e = [&](auto&& self, std::size_t i,
                    std::vector<std::int64_t>& e,
                    const std::vector<std::int64_t>& s) -> void {
    if (i == v) {
      DecoratedGraph weighted = g.with_self_intersections(e);
      if (is_negative_definite(intersection_matrix(weighted)))
        out.push_back({n, e});
      return;
    }
    std::int64_t lo = (require_minimal && g.genus(i) == 0) ? 2 : 1;
    for (std::int64_t ei = lo; ei <= max_e; ++ei) {
      if (ei * n[i] != s[i]) continue;  // adjunction equation at vertex i
      e[i] = ei;
      self(self, i + 1, e, s);
    }
  };

  while (true) {
    std::vector<std::int64_t> s(v);
    for (std::size_t i = 0; i < v; ++i) {
      s[i] = w.q[i];
      for (const auto& [j, m] : g.neighbors(i)) s[i] += m * n[j];
    }
    std::vector<std::int64_t> e(v, 0);
    scan_e(scan_e, 0, e, s);

    std::size_t pos = 0;
    while (pos < v && ++n[pos] > max_n) {
      n[pos] = 0;
      ++pos;
    }
    if (pos == v) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Distinct n-vectors (solutions and family skeletons) of an enumeration.
inline std::set<Cycle> distinct_n(const EnumerationResult& r) {
  std::set<Cycle> out;
  for (const Solution& s : r.solutions) out.insert(s.n);
  for (const SolutionFamily& f : r.families) out.insert(f.n);
  return out;
}

// Stability heuristic for the search bound: re-enumerates with the bound
// doubled and returns any n-vectors that appear only then. A non-empty
// result means max_n was too small to be trusted.
inline std::vector<Cycle> doubling_new_n(const DecoratedGraph& g,
                                         const EnumerationConfig& cfg = {}) {
  EnumerationConfig doubled = cfg;
  doubled.max_n = cfg.max_n * 2;
  std::set<Cycle> base = distinct_n(enumerate_weights(g, cfg));
  std::set<Cycle> grown = distinct_n(enumerate_weights(g, doubled));
  std::vector<Cycle> fresh;
  for (const Cycle& n : grown)
    if (!base.count(n)) fresh.push_back(n);
  return fresh;
}

}  // namespace ngor
