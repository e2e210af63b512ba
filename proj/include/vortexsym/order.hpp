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

#include <array>
#include <cstdint>
#include <string>

#include "vortexsym/monomial.hpp"

namespace vortexsym {

enum class OrderKind { lex, grevlex };

// A monomial order is realized as a linear map from exponent vectors to
// int16 keys; comparing monomials means comparing keys lexicographically.
// Multiplicativity follows from linearity: key(a*b) = key(a) + key(b).
struct OrderKey {
  alignas(32) std::array<std::int16_t, kMaxVars> lanes{};

  friend int compare(const OrderKey& a, const OrderKey& b) noexcept {
    return simd::kernels().compare_keys(a.lanes.data(), b.lanes.data());
  }
  friend OrderKey operator+(const OrderKey& a, const OrderKey& b) noexcept {
    OrderKey k;
    simd::kernels().add_keys(a.lanes.data(), b.lanes.data(), k.lanes.data());
    return k;
  }
  friend bool operator==(const OrderKey& a, const OrderKey& b) noexcept { return compare(a, b) == 0; }
};

int compare(const OrderKey& a, const OrderKey& b) noexcept;

class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, OrderKind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, OrderKind::grevlex, 0); }
  // Variables whose bit is set in `eliminated` form the leading block.
  // Within each block variables keep registry priority.
  static MonomialOrder elimination(std::uint32_t eliminated, OrderKind outer = OrderKind::grevlex,
                                   OrderKind inner = OrderKind::grevlex);
  // Leading block made of the first k registry variables.
  static MonomialOrder block(std::size_t k, OrderKind outer = OrderKind::grevlex,
                             OrderKind inner = OrderKind::grevlex);

  bool is_elimination() const noexcept { return eliminated_ != 0; }
  std::uint32_t eliminated_mask() const noexcept { return eliminated_; }
  OrderKind outer() const noexcept { return outer_; }
  OrderKind inner() const noexcept { return inner_; }

  OrderKey key(const Monomial& m, std::size_t nvars) const noexcept;
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
    return vortexsym::compare(key(a, nvars), key(b, nvars));
  }

  std::string describe(const VarRegistry& vars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind outer, OrderKind inner, std::uint32_t eliminated)
      : outer_(outer), inner_(inner), eliminated_(eliminated) {}

  OrderKind outer_;
  OrderKind inner_;
  std::uint32_t eliminated_;
};

const char* order_kind_name(OrderKind k) noexcept;

}  // namespace vortexsym
