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

// Fixed-width monomial kernels. Exponent vectors are 16 lanes of uint16;
// order keys are 16 lanes of int16 compared lexicographically. The scalar
// table is the reference; the AVX2 table must agree with it bit for bit.

#include <array>
#include <cstddef>
#include <cstdint>

namespace vortexsym::simd {

inline constexpr std::size_t kLanes = 16;

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;

struct MonomialKernels {
  Isa isa;
  // out = a + b
  void (*add)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out);
  // out = a - b, caller guarantees b divides a
  void (*sub)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out);
  void (*lcm)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out);
  void (*gcd)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out);
  // a divides b
  bool (*divides)(const std::uint16_t* a, const std::uint16_t* b);
  bool (*coprime)(const std::uint16_t* a, const std::uint16_t* b);
  bool (*equal)(const std::uint16_t* a, const std::uint16_t* b);
  std::uint32_t (*degree)(const std::uint16_t* a);
  // Lexicographic comparison of signed keys: -1, 0 or 1.
  int (*compare_keys)(const std::int16_t* a, const std::int16_t* b);
  void (*add_keys)(const std::int16_t* a, const std::int16_t* b, std::int16_t* out);
};

const MonomialKernels& scalar_kernels() noexcept;

// Null when the binary was built without AVX2 support or the CPU lacks it.
const MonomialKernels* avx2_kernels() noexcept;

Isa best_available_isa() noexcept;

// Active table. Defaults to the best available ISA; select_kernels overrides.
const MonomialKernels& kernels() noexcept;

// Throws std::runtime_error when the requested ISA is unavailable.
void select_kernels(Isa isa);

}  // namespace vortexsym::simd
