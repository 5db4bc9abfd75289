// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/membership.hpp"

#include <algorithm>

#include "monideal/limits.hpp"

namespace monideal {

std::optional<Box> Box::make(std::span<const Exponent> bounds, std::size_t max_points) {
  Box box;
  box.bounds_.assign(bounds.begin(), bounds.end());
  box.radix_.resize(bounds.size());
  std::size_t size = 1;
  for (std::size_t j = bounds.size(); j-- > 0;) {
    box.radix_[j] = size;
    const std::size_t extent = std::size_t{bounds[j]} + 1;
    if (size > max_points / extent) return std::nullopt;
    size *= extent;
  }
  box.size_ = size;
  return box;
}

std::size_t Box::index(const Exponent* exps) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < bounds_.size(); ++j) idx += exps[j] * radix_[j];
  return idx;
}

void Box::decode(std::size_t index, Exponent* exps) const {
  for (std::size_t j = 0; j < bounds_.size(); ++j) {
    exps[j] = static_cast<Exponent>(index / radix_[j]);
    index %= radix_[j];
  }
}

bool Box::next(Exponent* exps) const {
  for (std::size_t j = bounds_.size(); j-- > 0;) {
    if (exps[j] < bounds_[j]) {
      ++exps[j];
      return true;
    }
    exps[j] = 0;
  }
  return false;
}

MembershipTable::MembershipTable(const MonomialIdeal& ideal)
    : MembershipTable(ideal, limits().max_box) {}

MembershipTable::MembershipTable(const MonomialIdeal& ideal, std::size_t max_points)
    : ideal_(ideal) {
  const std::size_t n = ideal.ring()->total_vars();
  const Monomial l = lcm_of_generators(ideal);
  lcm_.assign(l.exponents().begin(), l.exponents().end());
  if (ideal.is_zero()) return;
  box_ = Box::make(lcm_, max_points);
  if (!box_) return;

  // bits[c] = 1 iff x^c is in I: seed the generators, then propagate upward
  // in index order (c - e_j always precedes c).
  bits_.assign(box_->size(), 0);
  for (std::size_t i = 0; i < ideal.size(); ++i) bits_[box_->index(ideal.row(i))] = 1;
  std::vector<Exponent> c(n, 0);
  std::size_t idx = 0;
  do {
    if (!bits_[idx]) {
      for (std::size_t j = 0; j < n; ++j) {
        if (c[j] > 0 && bits_[idx - box_->radix(j)]) {
          bits_[idx] = 1;
          break;
        }
      }
    }
    ++idx;
  } while (box_->next(c.data()));
}

bool MembershipTable::contains(const Exponent* exps) const {
  if (ideal_.is_zero()) return false;
  const std::size_t n = lcm_.size();
  if (box_) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) idx += std::min(exps[j], lcm_[j]) * box_->radix(j);
    return bits_[idx] != 0;
  }
  std::vector<Exponent> row(ideal_.stride(), 0);
  std::copy_n(exps, n, row.begin());
  return ideal_.contains_row(row.data());
}

}  // namespace monideal
