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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vortexsym/monomial.hpp"
#include "vortexsym/numeric.hpp"
#include "vortexsym/order.hpp"
#include "vortexsym/rational.hpp"

namespace vortexsym {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted descending
// by lex on raw exponents with nonzero coefficients, which makes equality
// structural. Order-dependent views (leading term, printing) take the order
// explicitly. Mixing polynomials from different registries throws.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Registry vars);
  Poly(Registry vars, const Rational& c);

  static Poly variable(Registry vars, std::size_t index, unsigned power = 1);
  static Poly variable(Registry vars, std::string_view name, unsigned power = 1);
  static Poly monomial(Registry vars, const Monomial& m, const Rational& c);
  static Poly from_terms(Registry vars, std::vector<Term> terms);
  // Text form: `-3/2*x^2*y + z - 7`, with parentheses, integer powers,
  // division by constants and implicit multiplication after a number.
  static Poly parse(Registry vars, std::string_view text);

  const Registry& registry() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  unsigned total_degree() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }
  // Bit i set iff variable i occurs.
  std::uint32_t support() const noexcept;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly pow(unsigned e) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  // Throws std::domain_error on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  Poly substitute(std::size_t var, const Poly& value) const;
  Poly substitute(std::string_view var, const Poly& value) const;
  Rational evaluate(std::span<const Rational> point) const;
  template <class T>
  T evaluate_as(std::span<const T> point) const;
  Poly derivative(std::size_t var) const;
  // Groups terms by the exponents of `vars`; each coefficient is free of
  // those variables. Keys are returned in descending lex order.
  std::vector<std::pair<Monomial, Poly>> coefficients_in(std::span<const std::size_t> vars) const;
  // Same polynomial over another registry, matching variables by name.
  Poly embed(Registry target) const;

  std::string to_string(const MonomialOrder& order = MonomialOrder::grevlex()) const;

 private:
  void require_same(const Poly& o) const;
  Registry vars_;
  std::vector<Term> terms_;
};

// Sorts descending lex, merges equal monomials, drops zeros.
void canonicalize_terms(std::vector<Term>& terms);

struct ContentSplit {
  Rational content;
  Poly primitive;
};

// p = content * primitive, primitive has coprime integer coefficients and a
// positive leading coefficient under `order`. Zero maps to (1, 0).
ContentSplit content_strip(const Poly& p, const MonomialOrder& order = MonomialOrder::grevlex());

class NonExactDivision : public std::runtime_error {
 public:
  NonExactDivision(Poly remainder)
      : std::runtime_error("polynomial division is not exact"), remainder_(std::move(remainder)) {}
  const Poly& remainder() const noexcept { return remainder_; }

 private:
  Poly remainder_;
};

// Exact quotient p / d; throws NonExactDivision with the remainder.
Poly divide_exact(const Poly& p, const Poly& d);

template <class T>
T Poly::evaluate_as(std::span<const T> point) const {
  if (point.size() < nvars()) throw std::invalid_argument("evaluation point has too few coordinates");
  T sum(0);
  for (const Term& t : terms_) {
    T v = to_float<T>(t.coeff);
    for (std::size_t i = 0; i < nvars(); ++i)
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

}  // namespace vortexsym
