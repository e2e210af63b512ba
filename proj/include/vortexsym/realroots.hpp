// Copyright 2026 The vortexsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "vortexsym/groebner.hpp"
#include "vortexsym/interval.hpp"
#include "vortexsym/univariate.hpp"

namespace vortexsym {

// ---- univariate root counting ----------------------------------------------

struct DescartesResult {
  std::size_t sign_changes;
  std::size_t positive_roots;  // distinct, by Sturm
  bool exact;                  // sign_changes == positive_roots
};
// Throws std::domain_error on the zero polynomial.
DescartesResult descartes_positive(const UPoly& p);
std::size_t sign_changes(const UPoly& p);

class SturmSequence {
 public:
  // Built on the squarefree part, so counts are of distinct roots.
  explicit SturmSequence(const UPoly& p);
  int variations(const Rational& x) const;
  int variations_at_infinity(int direction) const;
  // Distinct roots in (lo, hi].
  std::size_t count(const Rational& lo, const Rational& hi) const;
  std::size_t count_all() const;
  const UPoly& squarefree() const { return seq_.front(); }

 private:
  std::vector<UPoly> seq_;
};

// Exactly one root of the squarefree part lies in (lo, hi]; lo == hi marks an
// exact rational root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Interval enclosure() const { return {lo, hi}; }
};

// Ascending, pairwise disjoint, one per distinct real root.
std::vector<IsolatingInterval> sturm_isolate(const UPoly& p);
std::size_t count_real_roots(const UPoly& p);
std::size_t count_positive_roots(const UPoly& p);
// Bisects until hi - lo < eps (or the root is hit exactly).
IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& eps);
inline Rational refine_midpoint(const UPoly& p, const IsolatingInterval& iv, const Rational& eps) {
  return refine(p, iv, eps).enclosure().mid();
}
// Cauchy bound: every root has |x| < bound.
Rational root_bound(const UPoly& p);

// Sign of f at the root of p isolated by iv. Zero is decided exactly through
// gcd(f, p); otherwise iv is refined until the sign of f is certain.
int sign_at_root(const UPoly& f, const UPoly& p, const IsolatingInterval& iv);

// ---- dense matrices --------------------------------------------------------

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix dimensions do not match");
    Matrix z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == T(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;

// det(xI - A) by the Faddeev–LeVerrier recurrence; ascending coefficients.
template <class T>
std::vector<T> charpoly_coeffs(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    // tr(A M_k) from the diagonal of the product only.
    T tr(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) tr += a(i, j) * m(j, i);
    c[n - k] = -tr / T(static_cast<long>(k));
  }
  return c;
}

UPoly charpoly(const QMatrix& a);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact, from the characteristic polynomial. Throws std::invalid_argument on
// asymmetric input.
Inertia inertia(const QMatrix& a);

// Basis of the right null space by fraction-free row reduction.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& a);
std::size_t rank(const QMatrix& a);

// ---- quotient rings and the Hermite trace form -----------------------------

// Q[x]/I for a zero-dimensional ideal given by a reduced Gröbner basis.
class QuotientRing {
 public:
  explicit QuotientRing(GroebnerBasis basis);

  std::size_t dimension() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const GroebnerBasis& basis() const noexcept { return basis_; }

  // Coordinates of the normal form of p in the standard-monomial basis.
  std::vector<Rational> coordinates(const Poly& p) const;
  // Column j holds coordinates(f * b_j).
  QMatrix multiplication_matrix(const Poly& f) const;
  // Tr(m_{b_k}) for every standard monomial.
  const std::vector<Rational>& basis_traces() const;
  Rational trace_of_coordinates(const std::vector<Rational>& coords) const;
  Rational trace(const Poly& f) const { return trace_of_coordinates(coordinates(f)); }
  QMatrix hermite_matrix() const;

 private:
  void build_products() const;

  GroebnerBasis basis_;
  Reducer reducer_;
  std::vector<Monomial> monomials_;
  mutable std::vector<std::vector<std::vector<Rational>>> products_;  // [i][j-i] = coords(b_i b_j)
  mutable std::vector<Rational> traces_;
};

struct HermiteResult {
  std::size_t real_roots;     // signature of the trace form
  std::size_t complex_roots;  // rank of the trace form
  std::size_t dimension;      // quotient dimension (roots with multiplicity)
  Inertia inertia;
};

// Throws std::domain_error for positive-dimensional ideals.
HermiteResult hermite_count(const GroebnerBasis& grevlex_basis);
HermiteResult hermite_count(std::span<const Poly> generators);

}  // namespace vortexsym
