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

#include "vortexsym/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace vortexsym {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval pow(const Interval& a, unsigned k) {
  if (k == 0) return Interval::point(Rational(1));
  Rational lo = vortexsym::pow(a.lo, k), hi = vortexsym::pow(a.hi, k);
  if (k % 2 == 1) return {lo, hi};
  if (a.contains_zero()) return {Rational(0), std::max(lo, hi)};
  return {std::min(lo, hi), std::max(lo, hi)};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval evaluate(const Poly& p, std::span<const Interval> point) {
  if (point.size() < p.nvars()) throw std::invalid_argument("evaluation point has too few coordinates");
  Interval sum = Interval::point(Rational(0));
  for (const Term& t : p.terms()) {
    Interval v = Interval::point(t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono[i]) v = v * pow(point[i], t.mono[i]);
    sum = sum + v;
  }
  return sum;
}

Interval evaluate(const UPoly& p, const Interval& x) {
  Interval acc = Interval::point(Rational(0));
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + Interval::point(p.coeffs()[k]);
  return acc;
}

namespace {

Rational pow10(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(Integer(1), p);
}

// Scientific notation with `digits` significant digits, rounded toward
// +inf when `up`, toward -inf otherwise.
std::string round_decimal(const Rational& q, int digits, bool up) {
  if (sgn(q) == 0) return "0";
  const Rational a = abs_value(q);
  const Rational lim = pow10(digits);
  long s = digits - 1 - (static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
                         static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10)));
  Rational scaled = a * pow10(s);
  while (scaled >= lim) {
    --s;
    scaled = a * pow10(s);
  }
  while (scaled * 10 < lim) {
    ++s;
    scaled = a * pow10(s);
  }
  Integer n;
  if ((sgn(q) > 0) == up)
    mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  else
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string d = n.get_str();
  long exp10 = static_cast<long>(d.size()) - 1 - s;
  std::string out = sgn(q) < 0 ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  return out + "e" + std::to_string(exp10);
}

}  // namespace

std::string format_interval(const Interval& x, int digits) {
  return "[" + round_decimal(x.lo, digits, false) + ", " + round_decimal(x.hi, digits, true) + "]";
}

}  // namespace vortexsym
