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

#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "vortexsym/rational.hpp"

namespace vortexsym {

// 50 decimal digits; used wherever a double would lose the signal.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

template <class T>
T to_float(const Rational& q) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(q.get_d());
  } else {
    return T(q.get_num().get_str()) / T(q.get_den().get_str());
  }
}

// The exact binary value of x.
inline Rational to_rational(const BigFloat& x) {
  if (x == 0) return Rational(0);
  int e = 0;
  BigFloat m = frexp(x, &e);
  constexpr int kBits = 200;
  auto digits = ldexp(m, kBits).convert_to<boost::multiprecision::cpp_int>().str();
  Rational q{Integer(digits)};
  const long shift = static_cast<long>(e) - kBits;
  if (shift >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return q;
}

}  // namespace vortexsym
