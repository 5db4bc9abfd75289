// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/prime.hpp"
#include "monideal/provenance.hpp"

namespace monideal {

/// An irreducible monomial ideal (x_j^{b_j} : b_j present).
struct IrreducibleComponent {
  RingPtr ring;
  // One entry per variable; 0 means the variable does not occur.
  std::vector<Exponent> bounds;

  MonomialIdeal ideal() const;
  MonomialPrime radical() const;
  // x^c lies in the component iff c_j >= b_j for some present j.
  bool contains_row(const Exponent* exps) const;
  // other is contained in *this.
  bool contains(const IrreducibleComponent& other) const;
  std::string to_string() const;

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.bounds == b.bounds;
  }
};

// Canonical output order: by radical, then by bounds.
bool component_less(const IrreducibleComponent& a, const IrreducibleComponent& b);

struct PrimaryComponent {
  MonomialIdeal ideal;
  MonomialPrime radical;
};

// Irredundant irreducible decomposition. Reads the components off the socle
// of I + (x_j^{a_j+1}) over the exponent box of the lcm a of G(I); falls back
// to generator splitting when that box exceeds the cap. Throws
// ZeroOrUnitIdeal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

// Same contract, computed by recursive splitting of a non-pure-power
// generator u = u' u'' into coprime parts.
std::vector<IrreducibleComponent> irreducible_decomposition_by_splitting(const MonomialIdeal& ideal);

// Ass(T/I), sorted by (cardinality, lex support).
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

struct AssWitness {
  MonomialPrime prime;
  // A lowest-degree monomial f with I : f = prime.
  Monomial witness;
  std::size_t witness_count = 0;
};

// Brute-force cross-check of associated_primes: every monomial f in the box
// below the lcm of G(I) is tried and kept when I : f is a monomial prime.
std::vector<AssWitness> ass_oracle_witnesses(const MonomialIdeal& ideal);
std::vector<MonomialPrime> ass_oracle(const MonomialIdeal& ideal);

// Intersects the irreducible components sharing a radical. Irredundant, one
// component per associated prime.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);

// ideal == intersection of parts, decided without forming the intersection:
// every part must contain the ideal, and every irreducible component of the
// ideal must contain some part.
bool intersection_equals(const MonomialIdeal& ideal, std::span<const MonomialIdeal> parts);

// Minimal vertex covers of the generators' supports, each as sorted variable
// indices, ordered by (cardinality, lex).
std::vector<std::vector<std::size_t>> minimal_vertex_covers(const MonomialIdeal& ideal);
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);
std::size_t height(const MonomialIdeal& ideal);
std::size_t dim_quotient(const MonomialIdeal& ideal);
bool is_unmixed(const MonomialIdeal& ideal);

struct AssStability {
  // Smallest k with Ass(I^k) constant from k through k_max.
  unsigned index = 1;
  unsigned k_max = 1;
  std::vector<MonomialPrime> stable_ass;
  // Ass(I^k) for k = 1..k_max.
  std::vector<std::vector<MonomialPrime>> per_power;
  // True only when the provenance carries a theorem (transversal inputs);
  // otherwise the index means "stable up to k_max".
  bool proven = false;
};

AssStability astab(const MonomialIdeal& ideal, unsigned k_max = 6,
                   Provenance provenance = Provenance::generic);

}  // namespace monideal
