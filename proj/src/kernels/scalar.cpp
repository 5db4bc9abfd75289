// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/kernels.hpp"

#include <algorithm>
#include <limits>

namespace monideal::kernels {
namespace {

bool divides(const Exponent* a, const Exponent* b, std::size_t stride) {
  for (std::size_t i = 0; i < stride; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool equal(const Exponent* a, const Exponent* b, std::size_t stride) {
  return std::equal(a, a + stride, b);
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  for (std::size_t i = 0; i < stride; ++i) out[i] = std::max(a[i], b[i]);
}

void gcd(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  for (std::size_t i = 0; i < stride; ++i) out[i] = std::min(a[i], b[i]);
}

void quotient(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  for (std::size_t i = 0; i < stride; ++i) {
    out[i] = a[i] > b[i] ? static_cast<Exponent>(a[i] - b[i]) : Exponent{0};
  }
}

bool add(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) {
  bool ok = true;
  for (std::size_t i = 0; i < stride; ++i) {
    const unsigned sum = unsigned{a[i]} + unsigned{b[i]};
    ok &= sum <= std::numeric_limits<Exponent>::max();
    out[i] = static_cast<Exponent>(sum);
  }
  return ok;
}

std::ptrdiff_t find_divisor(const Exponent* rows, std::size_t count, std::size_t stride,
                            const Exponent* target) {
  for (std::size_t r = 0; r < count; ++r) {
    if (divides(rows + r * stride, target, stride)) return static_cast<std::ptrdiff_t>(r);
  }
  return -1;
}

void row_max(const Exponent* rows, std::size_t count, std::size_t stride, Exponent* out) {
  std::fill(out, out + stride, Exponent{0});
  for (std::size_t r = 0; r < count; ++r) lcm(out, rows + r * stride, out, stride);
}

constexpr KernelTable kScalar{
    "scalar", divides, equal, lcm, gcd, quotient, add, find_divisor, row_max,
};

}  // namespace

const KernelTable& scalar() { return kScalar; }

}  // namespace monideal::kernels
