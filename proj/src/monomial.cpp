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

#include "vortexsym/monomial.hpp"

#include <stdexcept>
#include <unordered_set>

namespace vortexsym {

std::shared_ptr<const VarRegistry> VarRegistry::make(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  return std::shared_ptr<const VarRegistry>(new VarRegistry(std::move(names)));
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarRegistry::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown variable '" + std::string(name) + "'");
}

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw std::invalid_argument("too many exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 32767");
  exp_[i] = static_cast<std::uint16_t>(e);
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the packed lanes.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint16_t e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string(const VarRegistry& vars) const {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace vortexsym
