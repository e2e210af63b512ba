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

#include "vortexsym/order.hpp"

#include <stdexcept>

namespace vortexsym {

namespace {

// Writes the key of the block formed by `vars` (priority order) into
// lanes starting at `pos`; returns the next free lane.
std::size_t block_key(const Monomial& m, const std::size_t* vars, std::size_t count, OrderKind kind,
                      OrderKey& key, std::size_t pos) {
  if (count == 0) return pos;
  if (kind == OrderKind::lex) {
    for (std::size_t i = 0; i < count; ++i) key.lanes[pos++] = static_cast<std::int16_t>(m[vars[i]]);
    return pos;
  }
  int deg = 0;
  for (std::size_t i = 0; i < count; ++i) deg += static_cast<int>(m[vars[i]]);
  key.lanes[pos++] = static_cast<std::int16_t>(deg);
  for (std::size_t i = count - 1; i >= 1; --i) key.lanes[pos++] = static_cast<std::int16_t>(-static_cast<int>(m[vars[i]]));
  return pos;
}

}  // namespace

MonomialOrder MonomialOrder::elimination(std::uint32_t eliminated, OrderKind outer, OrderKind inner) {
  if (eliminated == 0) throw std::invalid_argument("elimination order needs at least one eliminated variable");
  return MonomialOrder(outer, inner, eliminated);
}

MonomialOrder MonomialOrder::block(std::size_t k, OrderKind outer, OrderKind inner) {
  if (k == 0 || k > kMaxVars) throw std::invalid_argument("block size out of range");
  std::uint32_t mask = k == 32 ? ~0u : ((1u << k) - 1u);
  return MonomialOrder(outer, inner, mask);
}

OrderKey MonomialOrder::key(const Monomial& m, std::size_t nvars) const noexcept {
  OrderKey key;
  std::size_t first[kMaxVars];
  std::size_t second[kMaxVars];
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (eliminated_ & (1u << i))
      first[n1++] = i;
    else
      second[n2++] = i;
  }
  if (eliminated_ == 0) return (block_key(m, second, n2, outer_, key, 0), key);
  std::size_t pos = block_key(m, first, n1, outer_, key, 0);
  block_key(m, second, n2, inner_, key, pos);
  return key;
}

const char* order_kind_name(OrderKind k) noexcept { return k == OrderKind::lex ? "lex" : "grevlex"; }

std::string MonomialOrder::describe(const VarRegistry& vars) const {
  if (!is_elimination()) return order_kind_name(outer_);
  std::string out = "elimination(";
  bool first = true;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!(eliminated_ & (1u << i))) continue;
    if (!first) out += ',';
    out += vars.name(i);
    first = false;
  }
  out += std::string(";") + order_kind_name(outer_) + ';' + order_kind_name(inner_) + ')';
  return out;
}

}  // namespace vortexsym
