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

#include "vortexsym/univariate.hpp"

#include <stdexcept>

namespace vortexsym {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, std::size_t var) {
  std::vector<Rational> c(p.degree_in(var) + 1);
  for (const Term& t : p.terms()) {
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (i != var && t.mono[i] != 0)
        throw std::invalid_argument("polynomial is not univariate in '" + p.registry()->name(var) + "'");
    c[t.mono[var]] = t.coeff;
  }
  return UPoly(std::move(c));
}

Poly UPoly::to_poly(const Registry& vars, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(k)), c_[k]});
  return Poly::from_terms(vars, std::move(terms));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= x;
    acc += c_[k];
  }
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer g = 0, l = 1;
  for (const Rational& q : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (sgn(leading()) < 0) scale = -scale;
  return scale * *this;
}

UPoly UPoly::reflect() const {
  std::vector<Rational> r = c_;
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return UPoly(std::move(r));
}

UPoly UPoly::shift(const Rational& a) const {
  // Horner in polynomial arithmetic: p(x+a) = (...(c_n)(x+a) + c_{n-1}...)
  UPoly lin({a, Rational(1)});
  UPoly acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * lin + UPoly::constant(c_[k]);
  return acc;
}

std::size_t UPoly::zero_multiplicity() const {
  std::size_t k = 0;
  while (k < c_.size() && sgn(c_[k]) == 0) ++k;
  return k;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (Rational& q : r.c_) q = -q;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& k, const UPoly& a) {
  std::vector<Rational> c = a.c_;
  for (Rational& q : c) q *= k;
  return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  auto vars = VarRegistry::make({var});
  return to_poly(vars, 0).to_string(MonomialOrder::lex());
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] * inv;
    if (sgn(f) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  // Primitive remainders keep coefficient growth in check.
  UPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation needs matching abscissae and values");
  // Newton divided differences.
  std::vector<Rational> d(ys.begin(), ys.end());
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      Rational dx = xs[i] - xs[i - k];
      if (dx == 0) throw std::invalid_argument("interpolation abscissae must be distinct");
      d[i] = (d[i] - d[i - 1]) / dx;
    }
  UPoly out;
  for (std::size_t i = n; i-- > 0;) out = out * UPoly({-xs[i], Rational(1)}) + UPoly::constant(d[i]);
  return out;
}

UPoly from_power_sums(std::span<const Rational> power_sums) {
  // e_0 = 1, k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i; char poly
  // x^n - e_1 x^{n-1} + e_2 x^{n-2} - ...
  const std::size_t n = power_sums.size();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * power_sums[i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / static_cast<unsigned long>(k);
  }
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = k % 2 == 0 ? e[k] : Rational(-e[k]);
  return UPoly(std::move(c));
}

}  // namespace vortexsym
