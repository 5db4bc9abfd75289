// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <type_traits>
#include <utility>

#include "monideal/error.hpp"

namespace monideal {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const auto P = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ((m.data[i] % P) + P) % P;
  auto inverse = [P](std::int64_t x) {
    std::int64_t result = 1;
    for (std::int64_t e = P - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * x % P;
      x = x * x % P;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot * m.cols + c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(a[pivot * m.cols + k], a[rank * m.cols + k]);
    }
    const std::int64_t inv = inverse(a[rank * m.cols + c]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const std::int64_t f = a[r * m.cols + c] * inv % P;
      if (f == 0) continue;
      for (std::size_t k = c; k < m.cols; ++k) {
        a[r * m.cols + k] = ((a[r * m.cols + k] - f * a[rank * m.cols + k]) % P + P) % P;
      }
    }
    ++rank;
  }
  return rank;
}

// Bareiss elimination. T is std::int64_t (returns nullopt on overflow) or
// an arbitrary precision integer.
template <class T>
std::optional<std::size_t> bareiss(const IntMatrix& m) {
  std::vector<T> a(m.data.begin(), m.data.end());
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * m.cols + c]; };
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
    }
    const T piv = at(rank, c);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const T f = at(r, c);
      for (std::size_t k = c + 1; k < m.cols; ++k) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          std::int64_t x, y, z;
          if (__builtin_mul_overflow(piv, at(r, k), &x) ||
              __builtin_mul_overflow(f, at(rank, k), &y) ||
              __builtin_sub_overflow(x, y, &z)) {
            return std::nullopt;
          }
          at(r, k) = z / prev;
        } else {
          at(r, k) = (piv * at(r, k) - f * at(rank, k)) / prev;
        }
      }
      at(r, c) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("field characteristic must be a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

std::size_t rank(const IntMatrix& m, Field field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (!field.is_rational()) return rank_mod_p(m, field.characteristic());
  if (auto r = bareiss<std::int64_t>(m)) return *r;
  return *bareiss<boost::multiprecision::cpp_int>(m);
}

}  // namespace monideal
