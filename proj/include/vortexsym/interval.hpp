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

#include "vortexsym/poly.hpp"
#include "vortexsym/univariate.hpp"

namespace vortexsym {

// Closed rational interval [lo, hi] for certified enclosures.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  // +1 or -1 when the whole interval has that sign, 0 when undetermined.
  int certain_sign() const { return sgn(lo) > 0 ? 1 : sgn(hi) < 0 ? -1 : 0; }
  bool is_subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Throws std::domain_error when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval pow(const Interval& a, unsigned k);
Interval hull(const Interval& a, const Interval& b);

Interval evaluate(const Poly& p, std::span<const Interval> point);
Interval evaluate(const UPoly& p, const Interval& x);

// "[lo, hi]" with both ends rounded outward to `digits` significant digits.
std::string format_interval(const Interval& x, int digits = 12);

}  // namespace vortexsym
