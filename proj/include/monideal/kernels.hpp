// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace monideal {

using Exponent = std::uint16_t;

// Exponent rows are padded with zeros to a multiple of this many lanes so the
// vector variants never need a scalar tail.
inline constexpr std::size_t kLaneWidth = 16;

constexpr std::size_t padded_stride(std::size_t nvars) noexcept {
  return nvars == 0 ? kLaneWidth : (nvars + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
}

namespace kernels {

// Row kernels over padded exponent vectors. `stride` is always a multiple of
// kLaneWidth and every pointer addresses `stride` readable (and for outputs,
// writable) lanes. Outputs may alias inputs.
struct KernelTable {
  std::string_view name;

  // a[i] <= b[i] for all i.
  bool (*divides)(const Exponent* a, const Exponent* b, std::size_t stride);
  bool (*equal)(const Exponent* a, const Exponent* b, std::size_t stride);
  void (*lcm)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride);
  void (*gcd)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride);
  // out = max(a - b, 0), i.e. a / gcd(a, b).
  void (*quotient)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride);
  // out = a + b; returns false (out unspecified) if any lane overflows.
  bool (*add)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride);
  // Index of the first of `count` rows (stored back to back) dividing
  // `target`, or -1.
  std::ptrdiff_t (*find_divisor)(const Exponent* rows, std::size_t count,
                                 std::size_t stride, const Exponent* target);
  // Componentwise max over `count` rows into out.
  void (*row_max)(const Exponent* rows, std::size_t count, std::size_t stride,
                  Exponent* out);
};

const KernelTable& scalar();

// The AVX2 table, or nullptr when it was not compiled in or the CPU lacks
// AVX2.
const KernelTable* avx2();

// The table used by the library. Chosen once: AVX2 when available, unless the
// environment variable MONIDEAL_KERNELS is set to "scalar".
const KernelTable& active();

// Overrides the active table (tests and benchmarks).
void set_active(const KernelTable& table);

}  // namespace kernels
}  // namespace monideal
