// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "monideal/kernels.hpp"
#include "monideal/ring.hpp"

namespace monideal {

/// A monomial x^a over a BlockedRing, stored as a zero-padded exponent row.
class Monomial {
 public:
  // The monomial 1.
  explicit Monomial(RingPtr ring);
  Monomial(RingPtr ring, std::span<const unsigned> exponents);
  Monomial(RingPtr ring, std::initializer_list<unsigned> exponents);

  static Monomial variable(RingPtr ring, std::size_t var, unsigned power = 1);
  // Copies `stride()` lanes from a padded row.
  static Monomial from_row(RingPtr ring, const Exponent* row);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept;
  Exponent operator[](std::size_t var) const { return exps_.at(var); }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), num_vars()}; }
  const Exponent* data() const noexcept { return exps_.data(); }

  unsigned degree() const noexcept;
  bool is_one() const noexcept;
  std::vector<std::size_t> support() const;
  bool divides(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  // Lex on exponent vectors with x_1 > x_2 > ...
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  RingPtr ring_;
  std::vector<Exponent> exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// a / gcd(a, b).
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, unsigned k);

}  // namespace monideal
