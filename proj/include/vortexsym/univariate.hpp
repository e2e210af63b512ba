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
#include <string>
#include <vector>

#include "vortexsym/numeric.hpp"
#include "vortexsym/poly.hpp"
#include "vortexsym/rational.hpp"

namespace vortexsym {

// Dense univariate polynomial over Q, coefficients ascending, no trailing
// zeros. The zero polynomial has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  // Throws std::invalid_argument if p involves any variable other than var.
  static UPoly from_poly(const Poly& p, std::size_t var);
  Poly to_poly(const Registry& vars, std::size_t var) const;

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  template <class T>
  T eval_as(const T& x) const {
    T acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + to_float<T>(c_[k]);
    return acc;
  }
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  UPoly derivative() const;
  UPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;
  // p(-x)
  UPoly reflect() const;
  // p(x + a)
  UPoly shift(const Rational& a) const;
  // Multiplicity of the root x = 0.
  std::size_t zero_multiplicity() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& k, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};
UDivision divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
// Coefficients of the monic polynomial whose roots have power sums
// p_1..p_n (Newton identities). power_sums[k-1] = p_k.
// The polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);
UPoly from_power_sums(std::span<const Rational> power_sums);

}  // namespace vortexsym
