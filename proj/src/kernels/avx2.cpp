// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors
//
// AVX2 variants of the exponent-row kernels. This translation unit is the only
// one compiled with -mavx2; nothing here may run before dispatch has checked
// the CPU.

#include <immintrin.h>

#include "monideal/kernels.hpp"

namespace monideal::kernels {
namespace {

inline __m256i load(const Exponent* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Exponent* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// a <= b lane-wise  <=>  max(a, b) == b.
inline bool le_all(__m256i a, __m256i b) {
  const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(a, b), b);
  return _mm256_movemask_epi8(eq) == -1;
}

bool divides(const Exponent* a, const Exponent* b, std::size_t stride) {
  for (std::size_t i = 0; i < stride; i += kLaneWidth) {
    if (!le_all(load(a + i), load(b + i))) return false;
  }
  return true;
}

bool equal(const Exponent* a, const Exponent* b, std::size_t stride) {
  for (std::size_t i = 0; i < stride; i += kLaneWidth) {
    const __m256i eq = _mm256_cmpeq_epi16(load(a + i), load(b + i));
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  return true;
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  for (std::size_t i = 0; i < stride; i += kLaneWidth) {
    store(out + i, _mm256_max_epu16(load(a + i), load(b + i)));
  }
}

void gcd(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  for (std::size_t i = 0; i < stride; i += kLaneWidth) {
    store(out + i, _mm256_min_epu16(load(a + i), load(b + i)));
  }
}

void quotient(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  for (std::size_t i = 0; i < stride; i += kLaneWidth) {
    store(out + i, _mm256_subs_epu16(load(a + i), load(b + i)));
  }
}

bool add(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  bool ok = true;
  for (std::size_t i = 0; i < stride; i += kLaneWidth) {
    const __m256i va = load(a + i);
    const __m256i vb = load(b + i);
    const __m256i wrapped = _mm256_add_epi16(va, vb);
    const __m256i saturated = _mm256_adds_epu16(va, vb);
    ok &= _mm256_movemask_epi8(_mm256_cmpeq_epi16(wrapped, saturated)) == -1;
    store(out + i, wrapped);
  }
  return ok;
}

std::ptrdiff_t find_divisor(const Exponent* rows, std::size_t count, std::size_t stride,
                            const Exponent* target) {
  if (stride == kLaneWidth) {
    const __m256i t = load(target);
    for (std::size_t r = 0; r < count; ++r) {
      if (le_all(load(rows + r * kLaneWidth), t)) return static_cast<std::ptrdiff_t>(r);
    }
    return -1;
  }
  for (std::size_t r = 0; r < count; ++r) {
    if (divides(rows + r * stride, target, stride)) return static_cast<std::ptrdiff_t>(r);
  }
  return -1;
}

void row_max(const Exponent* rows, std::size_t count, std::size_t stride, Exponent* out) {
  for (std::size_t i = 0; i < stride; i += kLaneWidth) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t r = 0; r < count; ++r) acc = _mm256_max_epu16(acc, load(rows + r * stride + i));
    store(out + i, acc);
  }
}

constexpr KernelTable kAvx2{
    "avx2", divides, equal, lcm, gcd, quotient, add, find_divisor, row_max,
};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace monideal::kernels
