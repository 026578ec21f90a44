#pragma once

#include "ngor/ngor.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

// Naive reimplementation of the definiteness test: rational Gaussian
// elimination without pivoting; negative definite iff every pivot is
// negative (a zero pivot means not definite). Kept deliberately separate
// from the Bareiss/Sylvester route in the library.
inline bool naive_negative_definite(const ngor::IntMatrix& m) {
  using ngor::Rational;
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] >= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return true;
}

// Deterministic RNG; raw engine output is reduced by hand so results do not
// depend on library distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t below(std::int64_t n) {  // uniform-ish in [0, n)
    return static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(n));
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

// Random connected multigraph: a random spanning tree plus a few extra
// edges, multiplicities up to max_mult, genera up to max_p.
inline ngor::DecoratedGraph random_connected_graph(Rng& rng,
                                                   std::int64_t max_vertices,
                                                   std::int64_t max_mult,
                                                   std::int64_t max_p) {
  std::int64_t v = rng.between(1, max_vertices);
  std::vector<ngor::VertexId> ids;
  std::vector<std::int64_t> p;
  for (std::int64_t i = 0; i < v; ++i) {
    ids.push_back("v" + std::to_string(i));
    p.push_back(rng.between(0, max_p));
  }
  std::vector<ngor::RawEdge> edges;
  for (std::int64_t i = 1; i < v; ++i)
    edges.push_back({static_cast<std::size_t>(rng.below(i)),
                     static_cast<std::size_t>(i), rng.between(1, max_mult)});
  std::int64_t extra = v >= 2 ? rng.between(0, v - 1) : 0;
  for (std::int64_t k = 0; k < extra; ++k) {
    std::int64_t a = rng.below(v), b = rng.below(v);
    if (a == b) continue;
    edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                     rng.between(1, max_mult)});
  }
  return ngor::DecoratedGraph(std::move(ids), std::move(p), std::nullopt,
                              edges);
}

// Random weighted graph whose intersection form is negative definite by
// strict diagonal dominance: e_i exceeds the valency.
inline ngor::DecoratedGraph random_definite_graph(Rng& rng,
                                                  std::int64_t max_vertices,
                                                  std::int64_t max_mult,
                                                  std::int64_t max_p,
                                                  std::int64_t slack = 6) {
  ngor::DecoratedGraph g =
      random_connected_graph(rng, max_vertices, max_mult, max_p);
  std::vector<std::int64_t> e(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    e[i] = g.valency(i) + 1 + rng.between(0, slack);
  return g.with_self_intersections(std::move(e));
}

}  // namespace testsupport
