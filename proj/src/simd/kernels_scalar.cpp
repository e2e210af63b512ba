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

#include <stdexcept>
#include <atomic>

#include "vortexsym/simd/monomial_kernels.hpp"

namespace vortexsym::simd {

namespace {

void add_scalar(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  for (std::size_t i = 0; i < kLanes; ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
}

void sub_scalar(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  for (std::size_t i = 0; i < kLanes; ++i) out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
}

void lcm_scalar(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  for (std::size_t i = 0; i < kLanes; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

void gcd_scalar(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  for (std::size_t i = 0; i < kLanes; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
}

bool divides_scalar(const std::uint16_t* a, const std::uint16_t* b) {
  for (std::size_t i = 0; i < kLanes; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime_scalar(const std::uint16_t* a, const std::uint16_t* b) {
  for (std::size_t i = 0; i < kLanes; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

bool equal_scalar(const std::uint16_t* a, const std::uint16_t* b) {
  for (std::size_t i = 0; i < kLanes; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::uint32_t degree_scalar(const std::uint16_t* a) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kLanes; ++i) d += a[i];
  return d;
}

int compare_keys_scalar(const std::int16_t* a, const std::int16_t* b) {
  for (std::size_t i = 0; i < kLanes; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

void add_keys_scalar(const std::int16_t* a, const std::int16_t* b, std::int16_t* out) {
  for (std::size_t i = 0; i < kLanes; ++i) out[i] = static_cast<std::int16_t>(a[i] + b[i]);
}

constexpr MonomialKernels kScalar{Isa::scalar,   add_scalar,   sub_scalar,
                                  lcm_scalar,    gcd_scalar,   divides_scalar,
                                  coprime_scalar, equal_scalar, degree_scalar,
                                  compare_keys_scalar, add_keys_scalar};

const MonomialKernels* initial_table() noexcept {
  if (const MonomialKernels* t = avx2_kernels()) return t;
  return &kScalar;
}

std::atomic<const MonomialKernels*>& active() noexcept {
  static std::atomic<const MonomialKernels*> table{initial_table()};
  return table;
}

}  // namespace

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const MonomialKernels& scalar_kernels() noexcept { return kScalar; }

Isa best_available_isa() noexcept { return avx2_kernels() ? Isa::avx2 : Isa::scalar; }

const MonomialKernels& kernels() noexcept { return *active().load(std::memory_order_relaxed); }

void select_kernels(Isa isa) {
  const MonomialKernels* t = isa == Isa::avx2 ? avx2_kernels() : &kScalar;
  if (!t) throw std::runtime_error("AVX2 monomial kernels are not available on this machine");
  active().store(t, std::memory_order_relaxed);
}

}  // namespace vortexsym::simd
