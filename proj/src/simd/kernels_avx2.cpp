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

// Compiled with -mavx2 when the compiler supports it; dispatch happens at
// runtime, so nothing here may be called before the CPU check.

#include "vortexsym/simd/monomial_kernels.hpp"

#if defined(VORTEXSYM_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace vortexsym::simd {

#if defined(VORTEXSYM_HAVE_AVX2)

namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }
inline void store(void* p, __m256i v) { _mm256_storeu_si256(static_cast<__m256i*>(p), v); }

void add_avx2(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  store(out, _mm256_add_epi16(load(a), load(b)));
}

void sub_avx2(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  store(out, _mm256_sub_epi16(load(a), load(b)));
}

void lcm_avx2(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  store(out, _mm256_max_epu16(load(a), load(b)));
}

void gcd_avx2(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  store(out, _mm256_min_epu16(load(a), load(b)));
}

bool divides_avx2(const std::uint16_t* a, const std::uint16_t* b) {
  __m256i vb = load(b);
  __m256i hi = _mm256_max_epu16(load(a), vb);
  return _mm256_movemask_epi8(_mm256_cmpeq_epi16(hi, vb)) == -1;
}

bool coprime_avx2(const std::uint16_t* a, const std::uint16_t* b) {
  __m256i lo = _mm256_min_epu16(load(a), load(b));
  return _mm256_testz_si256(lo, lo) != 0;
}

bool equal_avx2(const std::uint16_t* a, const std::uint16_t* b) {
  return _mm256_movemask_epi8(_mm256_cmpeq_epi16(load(a), load(b))) == -1;
}

std::uint32_t degree_avx2(const std::uint16_t* a) {
  // Zero-extend to 32 bits so large exponents cannot overflow the sum.
  __m256i v = load(a);
  __m256i lo = _mm256_unpacklo_epi16(v, _mm256_setzero_si256());
  __m256i hi = _mm256_unpackhi_epi16(v, _mm256_setzero_si256());
  __m256i s = _mm256_add_epi32(lo, hi);
  __m128i t = _mm_add_epi32(_mm256_castsi256_si128(s), _mm256_extracti128_si256(s, 1));
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, 0x4e));
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, 0xb1));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(t));
}

int compare_keys_avx2(const std::int16_t* a, const std::int16_t* b) {
  unsigned diff = ~static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(load(a), load(b))));
  if (diff == 0) return 0;
  unsigned lane = static_cast<unsigned>(__builtin_ctz(diff)) / 2;
  return a[lane] < b[lane] ? -1 : 1;
}

void add_keys_avx2(const std::int16_t* a, const std::int16_t* b, std::int16_t* out) {
  store(out, _mm256_add_epi16(load(a), load(b)));
}

constexpr MonomialKernels kAvx2{Isa::avx2,     add_avx2,     sub_avx2,
                                lcm_avx2,      gcd_avx2,     divides_avx2,
                                coprime_avx2,  equal_avx2,   degree_avx2,
                                compare_keys_avx2, add_keys_avx2};

}  // namespace

const MonomialKernels* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const MonomialKernels* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace vortexsym::simd
