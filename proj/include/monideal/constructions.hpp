// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/ideal.hpp"
#include "monideal/prime.hpp"
#include "monideal/provenance.hpp"

namespace monideal {

// ---- Veronese type -------------------------------------------------------

struct VeroneseSpec {
  std::vector<unsigned> caps;
  unsigned degree = 0;
};

// Throws InvalidArgument unless 1 <= r_j <= d <= sum r_j.
void validate(const VeroneseSpec& spec);

// All x^a with |a| = d and a_j <= r_j, over the plain ring on caps.size()
// variables.
MonomialIdeal veronese_type(const VeroneseSpec& spec);

// Veronese-type ideal in the variables of one block, caps clipped to the
// degree. Degree 0 gives the unit ideal, an unreachable degree the zero ideal.
MonomialIdeal block_veronese(const RingPtr& ring, std::size_t block, unsigned cap, unsigned degree);

// Sum over 1 <= h_i <= 2 m_i, h_1 + h_2 = d of products of cap-2 Veronese
// ideals in two blocks of sizes m1, m2. Requires m_i >= 2, 2 <= d <= 2m1+2m2.
MonomialIdeal capped_veronese_gmp(unsigned m1, unsigned m2, unsigned d);

struct PolymatroidReport {
  bool polymatroidal = false;
  std::string reason;
};

// Exchange property over all ordered generator pairs.
PolymatroidReport polymatroid_report(const MonomialIdeal& ideal);
bool is_polymatroidal(const MonomialIdeal& ideal);

// ---- Generalized mixed products ------------------------------------------

// The substitution x_i^a -> L_{i,a}. Exponent 0 always maps to the unit ideal.
class GmpFamily {
 public:
  enum class Kind {
    // Entries given one by one.
    explicit_entries,
    // Veronese type with a fixed cap per variable.
    capped,
    // Squarefree Veronese (cap 1).
    squarefree,
    // Powers of the block's maximal ideal.
    veronese,
  };

  static GmpFamily capped(unsigned cap);
  static GmpFamily squarefree() { return GmpFamily(Kind::squarefree, 1); }
  static GmpFamily veronese() { return GmpFamily(Kind::veronese, 0); }
  static GmpFamily explicit_entries() { return GmpFamily(Kind::explicit_entries, 0); }

  Kind kind() const noexcept { return kind_; }
  unsigned cap() const noexcept { return cap_; }

  // Explicit families only. `ideal` must live in block `block` of its ring.
  void set(std::size_t block, unsigned exponent, MonomialIdeal ideal);
  const std::map<std::pair<std::size_t, unsigned>, MonomialIdeal>& entries() const noexcept {
    return entries_;
  }

  // L_{block, exponent} over `ring`. Throws MissingFamilyEntry.
  MonomialIdeal entry(const RingPtr& ring, std::size_t block, unsigned exponent) const;

 private:
  GmpFamily(Kind kind, unsigned cap) : kind_(kind), cap_(cap) {}

  Kind kind_;
  unsigned cap_;
  std::map<std::pair<std::size_t, unsigned>, MonomialIdeal> entries_;
};

struct GmpSpec {
  // Over a plain ring with one variable per block.
  MonomialIdeal base;
  std::vector<std::size_t> blocks;
  GmpFamily family;
};

// Blocked ring with the spec's block sizes; checks that it matches the base.
RingPtr gmp_ring(const GmpSpec& spec);

struct InclusionIssue {
  std::size_t block = 0;
  // L_{block,larger} is not inside L_{block,smaller}.
  unsigned larger = 0;
  unsigned smaller = 0;
};

struct ProductIssue {
  std::size_t block = 0;
  // L_a L_b is not inside L_c L_d although a + b >= c + d.
  unsigned a = 0, b = 0, c = 0, d = 0;
};

struct GmpReport {
  std::vector<InclusionIssue> inclusion;
  std::vector<ProductIssue> product;
  bool ok() const noexcept { return inclusion.empty() && product.empty(); }
};

// Checks the inclusion condition pairwise and the product condition over the
// exponents occurring in G(base). Throws MissingFamilyEntry.
GmpReport gmp_validate(const GmpSpec& spec);

// L = sum over u in G(base) of prod_i L_{i,u_i}. With `strict`, throws
// InclusionViolation when the inclusion condition fails.
MonomialIdeal gmp_build(const GmpSpec& spec, bool strict = false);

struct PowerIdentity {
  bool holds = false;
  // L(base^k) with L_{i,c} = prod of the entries of a splitting c = a_1+...+a_k.
  MonomialIdeal left;
  // L(base)^k
  MonomialIdeal right;
};

// With `strict`, throws Condition5Violation when the product condition
// fails; otherwise both sides are computed regardless.
PowerIdentity gmp_power_identity(const GmpSpec& spec, unsigned k, bool strict = true);

// Base ideal and family realizing capped_veronese_gmp(m1, m2, d).
GmpSpec capped_veronese_gmp_spec(unsigned m1, unsigned m2, unsigned d);

// ---- Transversal polymatroidal ideals ------------------------------------

struct TransversalSpec {
  std::size_t n = 0;
  // 0-based subsets of [n].
  std::vector<std::vector<std::size_t>> subsets;
  // Block sizes m_1..m_n; empty means all 1.
  std::vector<std::size_t> blocks;
};

// Throws InvalidArgument on empty or out-of-range subsets, bad block sizes or
// more than 20 factors (ResourceLimit).
void validate(const TransversalSpec& spec);
bool covers_ground_set(const TransversalSpec& spec);
RingPtr transversal_ring(const TransversalSpec& spec);
// P'_F: every variable of every block in F.
MonomialPrime block_prime(const RingPtr& ring, const std::vector<std::size_t>& subset);
// Subsets repeated k times; L(spec^k) = L(spec)^k.
TransversalSpec power(const TransversalSpec& spec, unsigned k);

// prod_d P'_{F_d}
MonomialIdeal transversal_build(const TransversalSpec& spec);
// The same ideal through gmp_build: base prod P_{F_d} with the Veronese family.
MonomialIdeal transversal_build_via_gmp(const TransversalSpec& spec);

struct IntersectionGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t components() const;
  bool connected(std::uint32_t subset) const;
};

IntersectionGraph intersection_graph(const TransversalSpec& spec);

struct TreePrime {
  MonomialPrime prime;
  // max |W| over connected vertex sets W with P'_W = prime
  std::size_t multiplicity = 0;
};

// One entry per distinct P'_W, W connected in the intersection graph, in
// prime order.
std::vector<TreePrime> tree_multiplicities(const TransversalSpec& spec);
std::vector<MonomialPrime> transversal_ass(const TransversalSpec& spec);

struct TransversalDecomposition {
  std::vector<PrimaryComponent> components;
  // Intersection checked against L^k.
  bool verified = false;
};

// Components (P'_h)^{k a_h}.
TransversalDecomposition transversal_power_decomposition(const TransversalSpec& spec, unsigned k);

struct BracketAss {
  std::vector<MonomialPrime> primes;
  // Equal to transversal_ass(spec).
  bool matches = false;
};

BracketAss bracket_ass_transversal(const TransversalSpec& spec, unsigned k);

struct CmReport {
  bool is_cm = false;
  std::size_t dim = 0;
  std::size_t depth = 0;
  // All F_d = [n] or all |F_d| = 1.
  bool extremal = false;
};

// Requires the subsets to cover [n].
CmReport cm_check_transversal(const TransversalSpec& spec);

// ---- Instances -----------------------------------------------------------

struct CappedParams {
  unsigned m1 = 0, m2 = 0, d = 0;
};

// An ideal with what is known about how it was built.
struct Instance {
  MonomialIdeal ideal;
  Provenance provenance = Provenance::generic;
  std::optional<TransversalSpec> transversal;
  std::optional<CappedParams> capped;
  std::optional<GmpSpec> gmp;
};

Instance make_instance(const TransversalSpec& spec);
Instance make_instance(CappedParams params);

}  // namespace monideal
