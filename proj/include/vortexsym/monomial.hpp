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
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vortexsym/simd/monomial_kernels.hpp"

namespace vortexsym {

inline constexpr std::size_t kMaxVars = simd::kLanes;
inline constexpr unsigned kMaxExponent = 0x7fff;

// Ordered variable names. Index 0 is the highest-priority variable for
// every order built from a registry.
class VarRegistry {
 public:
  static std::shared_ptr<const VarRegistry> make(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  std::size_t index(std::string_view name) const;

 private:
  explicit VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using Registry = std::shared_ptr<const VarRegistry>;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  const std::uint16_t* data() const noexcept { return exp_.data(); }
  std::uint16_t* data() noexcept { return exp_.data(); }

  unsigned degree() const noexcept { return simd::kernels().degree(exp_.data()); }
  bool is_one() const noexcept { return degree() == 0; }
  bool divides(const Monomial& other) const noexcept {
    return simd::kernels().divides(exp_.data(), other.exp_.data());
  }
  bool coprime(const Monomial& other) const noexcept {
    return simd::kernels().coprime(exp_.data(), other.exp_.data());
  }
  // Precondition: divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const noexcept {
    Monomial q;
    simd::kernels().sub(exp_.data(), divisor.exp_.data(), q.exp_.data());
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    simd::kernels().add(a.exp_.data(), b.exp_.data(), m.exp_.data());
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    simd::kernels().lcm(a.exp_.data(), b.exp_.data(), m.exp_.data());
    return m;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    simd::kernels().gcd(a.exp_.data(), b.exp_.data(), m.exp_.data());
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return simd::kernels().equal(a.exp_.data(), b.exp_.data());
  }

  // Pure lexicographic comparison on raw exponents (variable 0 first).
  friend int lex_compare(const Monomial& a, const Monomial& b) noexcept {
    return simd::kernels().compare_keys(reinterpret_cast<const std::int16_t*>(a.exp_.data()),
                                        reinterpret_cast<const std::int16_t*>(b.exp_.data()));
  }

  std::size_t hash() const noexcept;

  std::string to_string(const VarRegistry& vars) const;

 private:
  alignas(32) std::array<std::uint16_t, kMaxVars> exp_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace vortexsym
