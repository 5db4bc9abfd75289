// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/ring.hpp"

namespace monideal {

/// The prime P_F generated by the variables indexed by F.
class MonomialPrime {
 public:
  // Sorts and dedupes `vars`; throws InvalidArgument when empty or out of range.
  MonomialPrime(RingPtr ring, std::vector<std::size_t> vars);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& support() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool contains(std::size_t var) const;

  MonomialIdeal ideal() const;
  std::vector<std::string> names() const;
  std::string to_string() const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.vars_ == b.vars_;
  }
  // By cardinality, then lex on the sorted support.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
    if (auto c = a.vars_.size() <=> b.vars_.size(); c != 0) return c;
    return a.vars_ <=> b.vars_;
  }

 private:
  RingPtr ring_;
  std::vector<std::size_t> vars_;
};

// Sorts into canonical order and removes duplicates.
void canonicalize(std::vector<MonomialPrime>& primes);

}  // namespace monideal
