// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// The exponent box {c : 0 <= c_j <= bounds_j} with a mixed-radix index.
class Box {
 public:
  // nullopt when the box has more than `max_points` points.
  static std::optional<Box> make(std::span<const Exponent> bounds, std::size_t max_points);

  std::size_t size() const noexcept { return size_; }
  std::size_t dims() const noexcept { return bounds_.size(); }
  const std::vector<Exponent>& bounds() const noexcept { return bounds_; }
  std::size_t radix(std::size_t j) const { return radix_[j]; }

  std::size_t index(const Exponent* exps) const;
  void decode(std::size_t index, Exponent* exps) const;

  // Advances `exps` to the next point in index order; false after the last.
  bool next(Exponent* exps) const;

 private:
  std::vector<Exponent> bounds_;
  std::vector<std::size_t> radix_;
  std::size_t size_ = 1;
};

/// Fast membership x^c in I. Queries are clamped to the lcm of the
/// generators, so one bitmap over that box answers every query; when the box
/// exceeds the cap it falls back to scanning the generators.
class MembershipTable {
 public:
  explicit MembershipTable(const MonomialIdeal& ideal);
  MembershipTable(const MonomialIdeal& ideal, std::size_t max_points);

  // `exps` addresses at least total_vars lanes (padding not needed).
  bool contains(const Exponent* exps) const;

  bool dense() const noexcept { return box_.has_value(); }
  // Requires dense(). Box over the lcm of the generators.
  const Box& box() const { return *box_; }
  bool contains_index(std::size_t index) const { return bits_[index] != 0; }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }

 private:
  MonomialIdeal ideal_;
  std::vector<Exponent> lcm_;
  std::optional<Box> box_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace monideal
