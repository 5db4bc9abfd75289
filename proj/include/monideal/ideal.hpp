// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monideal/kernels.hpp"
#include "monideal/monomial.hpp"
#include "monideal/ring.hpp"

namespace monideal {

class MonomialPrime;

/// A monomial ideal held by its unique minimal generating set G(I).
///
/// Generators are stored back to back as padded exponent rows in canonical
/// order: lex-descending on exponent vectors (x_{11} > x_{12} > ... ). The
/// empty set is the zero ideal and {1} the unit ideal. Values are immutable.
class MonomialIdeal {
 public:
  // The zero ideal.
  explicit MonomialIdeal(RingPtr ring);
  // Minimalizes `gens`; throws RingMismatch if a generator lives elsewhere.
  MonomialIdeal(RingPtr ring, std::span<const Monomial> gens);
  MonomialIdeal(RingPtr ring, std::initializer_list<Monomial> gens);

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(RingPtr ring);
  static MonomialIdeal principal(const Monomial& m);
  // (x_v : v in vars)
  static MonomialIdeal from_variables(RingPtr ring, std::span<const std::size_t> vars);
  // Takes `rows` (count * stride lanes, padded) and minimalizes them.
  static MonomialIdeal from_rows(RingPtr ring, std::vector<Exponent> rows);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t stride() const noexcept;
  bool is_zero() const noexcept { return count_ == 0; }
  bool is_unit() const noexcept;

  const Exponent* row(std::size_t i) const { return rows_.data() + i * stride(); }
  const std::vector<Exponent>& rows() const noexcept { return rows_; }
  Monomial generator(std::size_t i) const;
  std::vector<Monomial> generators() const;

  bool contains(const Monomial& m) const;
  // `row` is a padded exponent row over this ring.
  bool contains_row(const Exponent* row) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.ring_ == *b.ring_ && a.rows_ == b.rows_;
  }

 private:
  struct Canonical {};
  MonomialIdeal(Canonical, RingPtr ring, std::vector<Exponent> rows);

  friend MonomialIdeal canonical_ideal(RingPtr, std::vector<Exponent>);

  RingPtr ring_;
  std::vector<Exponent> rows_;
  std::size_t count_ = 0;
};

// Wraps rows that are already minimal and in canonical order (no checks).
MonomialIdeal canonical_ideal(RingPtr ring, std::vector<Exponent> rows);

MonomialIdeal minimalize(RingPtr ring, std::span<const Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, unsigned k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_all(std::span<const MonomialIdeal> parts);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f);
// Throws InvalidArgument when `b` is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
// Generated by u^k for u in G(I); k = 0 gives the unit ideal.
MonomialIdeal bracket_power(const MonomialIdeal& a, unsigned k);
// Sends every variable outside P to 1. The result stays in the ring of `a`,
// supported on the variables of P.
MonomialIdeal localize(const MonomialIdeal& a, const MonomialPrime& p);

// a is contained in b.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);
std::vector<std::size_t> support(const MonomialIdeal& a);
Monomial lcm_of_generators(const MonomialIdeal& a);
std::optional<unsigned> generated_in_single_degree(const MonomialIdeal& a);

}  // namespace monideal
