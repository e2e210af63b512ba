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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vortexsym {

using Integer = mpz_class;

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation; only direct num/den construction needs
// an explicit canonicalize(), which make_rational performs.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "7", "-3/2", "0.125", "1e-9", "-2.5e3".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Exact binary value of a finite double.
Rational exact_from_double(double x);

Rational abs_value(const Rational& q);

// 2^k as a rational, k may be negative.
Rational power_of_two(long k);

Rational pow(const Rational& base, unsigned exponent);
// The rational with the smallest denominator in [lo, hi] (continued fractions).
Rational simplest_between(Rational lo, Rational hi);

}  // namespace vortexsym
