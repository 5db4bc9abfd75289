// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/linalg.hpp"
#include "monideal/provenance.hpp"

namespace monideal {

using Multidegree = std::vector<Exponent>;

// Componentwise lcms of nonempty subsets of G(I), sorted by (total degree,
// lex). Uses a dynamic program over the exponent box when it fits, closure
// under lcm with the generators otherwise. Throws ResourceLimit past
// limits().max_lattice points.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal);
// Always the closure route; kept separate so the two can be compared.
std::vector<Multidegree> lcm_lattice_by_closure(const MonomialIdeal& ideal);

struct BettiEntry {
  unsigned i = 0;
  Multidegree multidegree;
  unsigned total_degree = 0;
  std::size_t rank = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

// Nonzero multigraded Betti numbers of I (not T/I).
class BettiTable {
 public:
  BettiTable(RingPtr ring, Field field, std::vector<BettiEntry> entries);

  const RingPtr& ring() const noexcept { return ring_; }
  Field field() const noexcept { return field_; }
  // Sorted by (i, total degree, lex multidegree descending).
  const std::vector<BettiEntry>& entries() const noexcept { return entries_; }
  std::size_t beta(unsigned i, std::span<const Exponent> multidegree) const;
  // Sum over multidegrees of homological degree i.
  std::size_t total(unsigned i) const;
  // (i, j) -> beta_{i,j}
  std::map<std::pair<unsigned, unsigned>, std::size_t> graded() const;
  // pd(I); -1 when the table is empty.
  int max_index() const;
  int regularity() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  RingPtr ring_;
  Field field_;
  std::vector<BettiEntry> entries_;
};

// beta_{i,a}(I) = rank H~_{i-1}(K^a(I)), K^a(I) the upper Koszul complex
// { squarefree b <= a : x^{a-b} in I }, over the lcm lattice.
BettiTable betti_table(const MonomialIdeal& ideal, Field field = Field::rationals());

// Independent route: homology of the Koszul complex of T/I, one multidegree
// at a time over the whole box below the lcm of G(I). At most 12 variables
// and 12 generators.
BettiTable betti_oracle(const MonomialIdeal& ideal, Field field = Field::rationals());

// pd(T/I) = pd(I) + 1.
std::size_t projective_dimension(const MonomialIdeal& ideal, Field field = Field::rationals());
// depth(T/I) = total_vars - pd(T/I).
std::size_t depth_quotient(const MonomialIdeal& ideal, Field field = Field::rationals());
// reg(I) = max(|a| - i).
int regularity(const MonomialIdeal& ideal, Field field = Field::rationals());

struct LinearityReport {
  bool linear = false;
  std::optional<unsigned> degree;
  std::string reason;
};

LinearityReport linear_resolution_report(const BettiTable& table, const MonomialIdeal& ideal);
LinearityReport linear_resolution_report(const MonomialIdeal& ideal, Field field = Field::rationals());
bool has_linear_resolution(const MonomialIdeal& ideal, Field field = Field::rationals());

enum class QuotientOrder {
  // By degree, then lex descending (x11 > x12 > ...).
  lex_descending,
  // By degree, then lex ascending.
  lex_ascending,
};

// Every colon (u_1, ..., u_{j-1}) : u_j generated by variables.
bool has_linear_quotients(const MonomialIdeal& ideal, QuotientOrder order = QuotientOrder::lex_descending);
// `order` is a permutation of generator indices.
bool has_linear_quotients(const MonomialIdeal& ideal, std::span<const std::size_t> order);
// The generator order used by has_linear_quotients.
std::vector<std::size_t> quotient_order(const MonomialIdeal& ideal, QuotientOrder order);

bool is_cohen_macaulay(const MonomialIdeal& ideal, Field field = Field::rationals());

struct DepthStability {
  // Smallest k with depth(T/I^k) constant from k through k_max.
  unsigned index = 1;
  unsigned k_max = 1;
  std::size_t limit_depth = 0;
  // depth(T/I^k) for k = 1..k_max.
  std::vector<std::size_t> per_power;
  bool proven = false;
};

DepthStability dstab(const MonomialIdeal& ideal, unsigned k_max = 4,
                     Provenance provenance = Provenance::generic,
                     Field field = Field::rationals());

// total_vars - depth(T/L); InvalidArgument unless provenance is transversal.
std::size_t analytic_spread_transversal(const MonomialIdeal& ideal, Provenance provenance,
                                        Field field = Field::rationals());

}  // namespace monideal
