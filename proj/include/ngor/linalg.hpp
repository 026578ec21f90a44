#pragma once

#include "ngor/errors.hpp"
#include "ngor/graph.hpp"
#include "ngor/numbers.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ngor {

// Dense square matrix of arbitrary-precision integers. Rows and columns
// follow the graph's canonical vertex order.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  bool symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
  }

 private:
  std::size_t n_;
  std::vector<Integer> a_;
};

// Intersection matrix of a weighted graph: M(i,i) = -e_i, M(i,j) = e_ij.
inline IntMatrix intersection_matrix(const DecoratedGraph& g) {
  IntMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    m(i, i) = -Integer(g.self_intersection(i));
    for (const auto& [j, mult] : g.neighbors(i))
      if (j != i) m(i, j) = mult;
  }
  return m;
}

inline std::vector<Integer> mat_vec(const IntMatrix& m,
                                    const std::vector<Integer>& x) {
  std::vector<Integer> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < m.size(); ++j) acc += m(i, j) * x[j];
    out[i] = std::move(acc);
  }
  return out;
}

inline Integer quadratic_form(const IntMatrix& m,
                              const std::vector<Integer>& x) {
  Integer acc = 0;
  auto mx = mat_vec(m, x);
  for (std::size_t i = 0; i < m.size(); ++i) acc += x[i] * mx[i];
  return acc;
}

// Negative definiteness by the Sylvester criterion: the k-th leading
// principal minor must have sign (-1)^k for k = 1..n. Minors come from
// fraction-free (Bareiss) elimination, so everything stays in exact
// integers. The scan aborts at the first zero or wrong-signed minor, which
// also keeps every pivot nonzero.
inline bool is_negative_definite(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a = m;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& minor = a(k, k);  // leading minor of size k+1
    bool want_negative = (k % 2 == 0);
    if (want_negative ? minor >= 0 : minor <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return true;
}

// Unique exact solution of M x = b for invertible M. Fraction-free forward
// elimination (with row interchanges on zero pivots) followed by rational
// back substitution; the residual of the result is identically zero.
inline std::vector<Rational> solve_exact(const IntMatrix& m,
                                         const std::vector<Integer>& b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw Error("right-hand side has wrong length");

  // augmented matrix [M | b]
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot_row = k;
      while (pivot_row < n && a[pivot_row][k] == 0) ++pivot_row;
      if (pivot_row == n) throw SingularMatrixError("matrix is singular");
      std::swap(a[k], a[pivot_row]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
  }
  return x;
}

}  // namespace ngor
