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

#include "vortexsym/realroots.hpp"

#include <algorithm>
#include <map>

namespace vortexsym {

namespace {

// Divide by the positive content so signs are preserved.
UPoly positive_primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly q = p.primitive();
  return sgn(q.leading()) == sgn(p.leading()) ? q : -q;
}

int variations_of(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t sign_changes(const UPoly& p) {
  std::vector<int> s;
  for (const Rational& c : p.coeffs()) s.push_back(sgn(c));
  return static_cast<std::size_t>(variations_of(s));
}

DescartesResult descartes_positive(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("Descartes' rule needs a nonzero polynomial");
  std::size_t v = sign_changes(p);
  std::size_t pos = count_positive_roots(p);
  return {v, pos, v == pos};
}

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  seq_.push_back(positive_primitive(squarefree_part(p)));
  if (seq_[0].degree() <= 0) return;
  seq_.push_back(positive_primitive(seq_[0].derivative()));
  while (seq_.back().degree() > 0) {
    UPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
    if (r.is_zero()) break;
    seq_.push_back(positive_primitive(-r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const UPoly& q : seq_) s.push_back(q.sign_at(x));
  return variations_of(s);
}

int SturmSequence::variations_at_infinity(int direction) const {
  std::vector<int> s;
  for (const UPoly& q : seq_) {
    int lead = sgn(q.leading());
    s.push_back(direction < 0 && q.degree() % 2 == 1 ? -lead : lead);
  }
  return variations_of(s);
}

std::size_t SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return static_cast<std::size_t>(variations(lo) - variations(hi));
}

std::size_t SturmSequence::count_all() const {
  return static_cast<std::size_t>(variations_at_infinity(-1) - variations_at_infinity(1));
}

Rational root_bound(const UPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs_value(p.coeffs()[static_cast<std::size_t>(k)] / p.leading()));
  return m + 1;
}

std::vector<IsolatingInterval> sturm_isolate(const UPoly& p) {
  SturmSequence s(p);
  std::vector<IsolatingInterval> out;
  if (s.squarefree().degree() <= 0) return out;
  Rational b = root_bound(s.squarefree());
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    std::size_t n = s.count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({lo, hi});
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& c) { return a.lo < c.lo; });
  return out;
}

std::size_t count_real_roots(const UPoly& p) { return SturmSequence(p).count_all(); }

std::size_t count_positive_roots(const UPoly& p) {
  SturmSequence s(p);
  return static_cast<std::size_t>(s.variations(Rational(0)) - s.variations_at_infinity(1));
}

IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& eps) {
  if (iv.exact()) return iv;
  UPoly q = squarefree_part(p);
  if (q.sign_at(iv.hi) == 0) return {iv.hi, iv.hi};
  int s_lo = q.sign_at(iv.lo);
  std::unique_ptr<SturmSequence> sturm;
  while (iv.hi - iv.lo >= eps) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s_mid = q.sign_at(mid);
    if (s_mid == 0) return {mid, mid};
    bool root_left;
    if (s_lo != 0) {
      root_left = s_mid != s_lo;
    } else {
      // lo is a neighbouring root; fall back to counting.
      if (!sturm) sturm = std::make_unique<SturmSequence>(q);
      root_left = sturm->count(iv.lo, mid) == 1;
    }
    if (root_left) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
      s_lo = s_mid;
    }
  }
  return iv;
}

int sign_at_root(const UPoly& f, const UPoly& p, const IsolatingInterval& iv) {
  if (f.is_zero()) return 0;
  if (iv.exact()) return f.sign_at(iv.lo);
  UPoly common = gcd(f, p);
  if (common.degree() > 0 && SturmSequence(common).count(iv.lo, iv.hi) > 0) return 0;
  IsolatingInterval cur = iv;
  Rational eps = cur.hi - cur.lo;
  for (int round = 0; round < 4000; ++round) {
    int s = evaluate(f, cur.enclosure()).certain_sign();
    if (s != 0) return s;
    eps /= 4;
    cur = refine(p, cur, eps);
    if (cur.exact()) return f.sign_at(cur.lo);
  }
  throw std::runtime_error("sign at an algebraic root did not settle");
}

// ---- matrices ----------------------------------------------------------------

UPoly charpoly(const QMatrix& a) {
  // Run the recurrence on D*A over Z, where D clears all denominators, then
  // rescale: chi_A(x) = D^-n chi_{DA}(D x).
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a(i, j).get_den_mpz_t());
  Matrix<Integer> b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j).get_num() * (d / a(i, j).get_den());
  std::vector<Integer> cb = charpoly_coeffs(b);
  std::vector<Rational> c(n + 1);
  Integer scale = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    c[k] = Rational(cb[k], scale);
    c[k].canonicalize();
    scale *= d;
  }
  return UPoly(std::move(c));
}

Inertia inertia(const QMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("inertia needs a symmetric matrix");
  UPoly chi = charpoly(a);
  Inertia in;
  in.zero = chi.zero_multiplicity();
  // All roots are real, so Descartes' bound is exact on both sides.
  in.positive = sign_changes(chi);
  in.negative = sign_changes(chi.reflect());
  return in;
}

namespace {

// Row echelon form over Z: rows scaled to integers and kept primitive.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
};

Echelon echelon(const QMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Integer>> r(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j).get_num() * (den / a(i, j).get_den());
  }
  auto make_primitive = [](std::vector<Integer>& row) {
    Integer g = 0;
    for (const Integer& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (Integer& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  };
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && sgn(r[piv][col]) == 0) ++piv;
    if (piv == m) continue;
    std::swap(r[row], r[piv]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(r[i][col]) == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), r[row][col].get_mpz_t(), r[i][col].get_mpz_t());
      Integer p = r[row][col] / g, f = r[i][col] / g;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = p * r[i][j] - f * r[row][j];
      make_primitive(r[i]);
    }
    e.pivots.push_back(col);
    ++row;
  }
  r.resize(row);
  e.rows = std::move(r);
  return e;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& a) {
  const std::size_t n = a.cols();
  Echelon e = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      Rational x(e.rows[k][free], e.rows[k][e.pivots[k]]);
      x.canonicalize();
      v[e.pivots[k]] = -x;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const QMatrix& a) { return echelon(a).pivots.size(); }

// ---- quotient ring -----------------------------------------------------------

QuotientRing::QuotientRing(GroebnerBasis basis)
    : basis_(std::move(basis)), reducer_(basis_), monomials_(standard_monomials(basis_)) {}

std::vector<Rational> QuotientRing::coordinates(const Poly& p) const {
  Poly r = reducer_(p);
  std::vector<Rational> c(monomials_.size());
  for (const Term& t : r.terms()) {
    auto it = std::find(monomials_.begin(), monomials_.end(), t.mono);
    if (it == monomials_.end()) throw std::logic_error("normal form left the standard-monomial span");
    c[static_cast<std::size_t>(it - monomials_.begin())] = t.coeff;
  }
  return c;
}

QMatrix QuotientRing::multiplication_matrix(const Poly& f) const {
  const std::size_t d = dimension();
  QMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = coordinates(f * Poly::monomial(basis_.registry(), monomials_[j], Rational(1)));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

void QuotientRing::build_products() const {
  if (!products_.empty()) return;
  const std::size_t d = dimension();
  products_.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      products_[i].push_back(coordinates(Poly::monomial(basis_.registry(), monomials_[i] * monomials_[j], Rational(1))));
  traces_.assign(d, Rational(0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const auto& c = k <= l ? products_[k][l - k] : products_[l][k - l];
      traces_[k] += c[l];
    }
}

const std::vector<Rational>& QuotientRing::basis_traces() const {
  build_products();
  return traces_;
}

Rational QuotientRing::trace_of_coordinates(const std::vector<Rational>& coords) const {
  const auto& t = basis_traces();
  Rational s(0);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) s += coords[k] * t[k];
  return s;
}

QMatrix QuotientRing::hermite_matrix() const {
  build_products();
  const std::size_t d = dimension();
  QMatrix h(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational v = trace_of_coordinates(products_[i][j - i]);
      h(i, j) = v;
      h(j, i) = v;
    }
  return h;
}

HermiteResult hermite_count(const GroebnerBasis& grevlex_basis) {
  if (grevlex_basis.is_unit_ideal()) return {0, 0, 0, {}};
  QuotientRing q(grevlex_basis);
  QMatrix h = q.hermite_matrix();
  Inertia in = inertia(h);
  return {static_cast<std::size_t>(in.signature()), in.positive + in.negative, q.dimension(), in};
}

HermiteResult hermite_count(std::span<const Poly> generators) {
  return hermite_count(buchberger(generators, MonomialOrder::grevlex()));
}

}  // namespace vortexsym
