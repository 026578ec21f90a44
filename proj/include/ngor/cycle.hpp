#pragma once

#include "ngor/errors.hpp"
#include "ngor/graph.hpp"
#include "ngor/linalg.hpp"
#include "ngor/numbers.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ngor {

// Integer divisor supported on the exceptional curves, one coefficient per
// vertex in canonical order.
using Cycle = std::vector<std::int64_t>;

struct CycleReport {
  std::vector<Rational> z;  // coefficients of the anti-canonical cycle
  bool integral = false;    // every z_i an integer
  bool effective = false;   // every z_i >= 0
  // z - 1, present iff z is integral with all z_i >= 1.
  std::optional<Cycle> n;
  std::vector<std::string> warnings;
};

inline void require_negative_definite(const DecoratedGraph& g,
                                      const IntMatrix& m) {
  (void)g;
  if (!is_negative_definite(m))
    throw NotNegativeDefiniteError(
        "intersection form is not negative definite; the anti-canonical "
        "cycle is undefined");
}

// The anti-canonical cycle Z_K = sum z_i E_i is the unique rational divisor
// with Z_K . E_i = -K . E_i for every i. With K . E_i = 2 p_i - 2 + e_i
// from adjunction, the defining relations read, in matrix form,
//
//   M z = c,   c_i = 2 - 2 p_i - e_i,
//
// equivalently 2 p_i - 2 = (z_i - 1) e_i - sum_{j != i} z_j e_ij.
inline CycleReport anticanonical_cycle(const DecoratedGraph& g) {
  IntMatrix m = intersection_matrix(g);
  require_negative_definite(g, m);

  std::vector<Integer> c(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    c[i] = Integer(2) - 2 * g.genus(i) - g.self_intersection(i);

  CycleReport report;
  report.z = solve_exact(m, c);
  report.integral = true;
  report.effective = true;
  bool all_ge_one = true;
  for (const Rational& zi : report.z) {
    if (!is_integral(zi)) report.integral = false;
    if (zi < 0) report.effective = false;
    if (zi < 1) all_ge_one = false;
  }
  if (report.integral && all_ge_one) {
    Cycle n(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Integer& zi = numerator(report.z[i]);
      if (zi > std::numeric_limits<std::int64_t>::max())
        throw Error("anti-canonical coefficient exceeds 64-bit range");
      n[i] = zi.convert_to<std::int64_t>() - 1;
    }
    report.n = std::move(n);
  }
  if (!is_minimal(g))
    report.warnings.push_back(
        "graph is not minimal (a vertex has p=0 and e=1); the anti-canonical "
        "cycle need not be effective");
  return report;
}

// Numerically Gorenstein: the anti-canonical cycle is an integral divisor.
inline bool is_n_gorenstein(const DecoratedGraph& g) {
  return anticanonical_cycle(g).integral;
}

// Arithmetic genus of an integer cycle d by adjunction:
//   p_a(d) = 1 + (d.d + K.d) / 2,  d.d = d^T M d,  K.d = -(M d) . z.
inline Rational arithmetic_genus(const DecoratedGraph& g, const Cycle& d) {
  if (d.size() != g.size()) throw Error("cycle has wrong length");
  IntMatrix m = intersection_matrix(g);
  require_negative_definite(g, m);

  std::vector<Integer> di(d.begin(), d.end());
  std::vector<Integer> md = mat_vec(m, di);
  Integer self = 0;
  for (std::size_t i = 0; i < g.size(); ++i) self += di[i] * md[i];

  std::vector<Rational> z = anticanonical_cycle(g).z;
  Rational kd(0);
  for (std::size_t i = 0; i < g.size(); ++i) kd -= Rational(md[i]) * z[i];

  return Rational(1) + (Rational(self) + kd) / Rational(2);
}

// Residual of the adjunction system in the shifted variables n = z - 1:
// entry i is e_i n_i - q_i - sum_{j != i} e_ij n_j. A pair (n, e) solves
// the system exactly when the residual vanishes.
inline std::vector<Integer> adjunction_residual(const DecoratedGraph& g,
                                                const Cycle& n) {
  if (n.size() != g.size()) throw Error("cycle has wrong length");
  DerivedWeights w = derived_weights(g);
  std::vector<Integer> residual(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Integer acc = Integer(g.self_intersection(i)) * n[i] - w.q[i];
    for (const auto& [j, mult] : g.neighbors(i))
      if (j != i) acc -= Integer(mult) * n[j];
    residual[i] = std::move(acc);
  }
  return residual;
}

}  // namespace ngor
