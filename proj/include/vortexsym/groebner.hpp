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
#include <vector>

#include "vortexsym/order.hpp"
#include "vortexsym/poly.hpp"

namespace vortexsym {

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

// Multivariate division: p = sum q_i * divisors_i + remainder, with no term
// of the remainder divisible by any leading monomial. Divisors are tried in
// the given sequence.
DivisionResult reduce(const Poly& p, std::span<const Poly> divisors, const MonomialOrder& order);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

// Reduced Gröbner basis. Elements are primitive integer polynomials with a
// positive leading coefficient, sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Registry vars, MonomialOrder order, std::vector<Poly> polys)
      : vars_(std::move(vars)), order_(order), polys_(std::move(polys)) {}

  const Registry& registry() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Poly>& polys() const noexcept { return polys_; }
  std::size_t size() const noexcept { return polys_.size(); }
  const Poly& operator[](std::size_t i) const { return polys_.at(i); }
  bool is_unit_ideal() const noexcept { return polys_.size() == 1 && polys_[0].is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  Registry vars_;
  MonomialOrder order_;
  std::vector<Poly> polys_;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t coprime_skips = 0;
  std::size_t chain_skips = 0;
};

// normal: smallest lcm under the working order first (a degree-first queue
// for graded orders). sugar: smallest sugar degree first, then as normal.
enum class PairSelection { normal, sugar };

struct BuchbergerOptions {
  PairSelection selection = PairSelection::normal;
  bool coprime_criterion = true;
  bool chain_criterion = true;
  BuchbergerStats* stats = nullptr;
  // One line per nonzero S-polynomial remainder on stderr.
  bool trace = false;
};

GroebnerBasis buchberger(std::span<const Poly> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

// Generators of I ∩ Q[remaining variables], computed under an elimination
// order whose leading block is `drop`. The returned basis keeps that order.
GroebnerBasis eliminate(std::span<const Poly> generators, std::span<const std::size_t> drop,
                        OrderKind inner = OrderKind::grevlex, const BuchbergerOptions& options = {});

// Reusable normal-form evaluator over a fixed basis.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& basis);
  Poly operator()(const Poly& p) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Unique remainder of p modulo the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& basis);
bool ideal_contains(const GroebnerBasis& basis, const Poly& p);

// True when every S-polynomial of `polys` reduces to zero modulo `polys`.
bool is_groebner_basis(std::span<const Poly> polys, const MonomialOrder& order);

bool is_zero_dimensional(const GroebnerBasis& basis);
// Monomials outside the leading-term ideal, ascending by the basis order.
// Throws std::domain_error unless the ideal is zero-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis);

}  // namespace vortexsym
