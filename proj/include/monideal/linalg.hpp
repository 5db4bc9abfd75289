// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monideal {

// Coefficient field for homology: the rationals, or GF(p) for a prime p < 2^31.
class Field {
 public:
  static Field rationals() noexcept { return Field(0); }
  // Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_;
};

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Rank over `field`. Over the rationals this is fraction-free elimination in
// 64-bit arithmetic, redone with arbitrary precision if an entry overflows.
std::size_t rank(const IntMatrix& m, Field field);

}  // namespace monideal
