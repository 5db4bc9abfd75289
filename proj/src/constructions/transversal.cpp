// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "monideal/constructions.hpp"
#include "monideal/error.hpp"
#include "monideal/limits.hpp"
#include "monideal/resolution.hpp"

namespace monideal {

void validate(const TransversalSpec& spec) {
  if (spec.n == 0) throw InvalidArgument("transversal spec needs n >= 1");
  if (spec.subsets.empty()) throw InvalidArgument("transversal spec needs at least one subset");
  if (spec.subsets.size() > limits().max_transversal_factors) {
    throw ResourceLimit("transversal spec exceeds max_transversal_factors");
  }
  for (const auto& f : spec.subsets) {
    if (f.empty()) throw InvalidArgument("transversal subsets must be non-empty");
    for (std::size_t i : f) {
      if (i >= spec.n) throw InvalidArgument("transversal subset element out of range");
    }
  }
  if (!spec.blocks.empty()) {
    if (spec.blocks.size() != spec.n) throw InvalidArgument("need one block size per ground element");
    for (std::size_t m : spec.blocks) {
      if (m == 0) throw InvalidArgument("block sizes must be positive");
    }
  }
}

bool covers_ground_set(const TransversalSpec& spec) {
  std::vector<bool> hit(spec.n, false);
  for (const auto& f : spec.subsets) {
    for (std::size_t i : f) hit[i] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

RingPtr transversal_ring(const TransversalSpec& spec) {
  validate(spec);
  if (spec.blocks.empty()) return BlockedRing::plain(spec.n);
  return BlockedRing::make(spec.blocks);
}

MonomialPrime block_prime(const RingPtr& ring, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> vars;
  for (std::size_t i : subset) {
    for (std::size_t j = 0; j < ring->block_size(i); ++j) vars.push_back(ring->variable(i, j));
  }
  return MonomialPrime(ring, std::move(vars));
}

TransversalSpec power(const TransversalSpec& spec, unsigned k) {
  TransversalSpec out = spec;
  out.subsets.clear();
  for (unsigned t = 0; t < k; ++t) out.subsets.insert(out.subsets.end(), spec.subsets.begin(), spec.subsets.end());
  return out;
}

MonomialIdeal transversal_build(const TransversalSpec& spec) {
  const RingPtr ring = transversal_ring(spec);
  MonomialIdeal result = MonomialIdeal::unit(ring);
  for (const auto& f : spec.subsets) result = product(result, block_prime(ring, f).ideal());
  return result;
}

MonomialIdeal transversal_build_via_gmp(const TransversalSpec& spec) {
  TransversalSpec plain = spec;
  plain.blocks.clear();
  GmpSpec gmp{transversal_build(plain), spec.blocks, GmpFamily::veronese()};
  if (gmp.blocks.empty()) gmp.blocks.assign(spec.n, 1);
  return gmp_build(gmp);
}

std::size_t IntersectionGraph::components() const {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = vertices;
  for (auto [a, b] : edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

bool IntersectionGraph::connected(std::uint32_t subset) const {
  if (subset == 0) return false;
  std::uint32_t reached = subset & (~subset + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [a, b] : edges) {
      const std::uint32_t ma = std::uint32_t{1} << a, mb = std::uint32_t{1} << b;
      if (!(subset & ma) || !(subset & mb)) continue;
      if (((reached & ma) != 0) != ((reached & mb) != 0)) {
        reached |= ma | mb;
        grew = true;
      }
    }
  }
  return reached == subset;
}

IntersectionGraph intersection_graph(const TransversalSpec& spec) {
  validate(spec);
  IntersectionGraph g;
  g.vertices = spec.subsets.size();
  for (std::size_t a = 0; a < g.vertices; ++a) {
    for (std::size_t b = a + 1; b < g.vertices; ++b) {
      const auto& fa = spec.subsets[a];
      const auto& fb = spec.subsets[b];
      const bool meet = std::any_of(fa.begin(), fa.end(), [&](std::size_t i) {
        return std::find(fb.begin(), fb.end(), i) != fb.end();
      });
      if (meet) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

std::vector<TreePrime> tree_multiplicities(const TransversalSpec& spec) {
  const IntersectionGraph g = intersection_graph(spec);
  const RingPtr ring = transversal_ring(spec);
  std::map<std::vector<std::size_t>, std::size_t> best;
  for (std::uint32_t w = 1; w < (std::uint32_t{1} << g.vertices); ++w) {
    if (!g.connected(w)) continue;
    std::vector<std::size_t> ground;
    for (std::size_t d = 0; d < g.vertices; ++d) {
      if (w >> d & 1) ground.insert(ground.end(), spec.subsets[d].begin(), spec.subsets[d].end());
    }
    std::sort(ground.begin(), ground.end());
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    auto& m = best[ground];
    m = std::max<std::size_t>(m, static_cast<std::size_t>(std::popcount(w)));
  }
  std::vector<TreePrime> out;
  for (const auto& [ground, m] : best) out.push_back({block_prime(ring, ground), m});
  std::sort(out.begin(), out.end(), [](const TreePrime& a, const TreePrime& b) { return a.prime < b.prime; });
  return out;
}

std::vector<MonomialPrime> transversal_ass(const TransversalSpec& spec) {
  std::vector<MonomialPrime> primes;
  for (auto& t : tree_multiplicities(spec)) primes.push_back(std::move(t.prime));
  return primes;
}

TransversalDecomposition transversal_power_decomposition(const TransversalSpec& spec, unsigned k) {
  if (k == 0) throw InvalidArgument("power must be positive");
  TransversalDecomposition out;
  for (const auto& t : tree_multiplicities(spec)) {
    out.components.push_back({power(t.prime.ideal(), static_cast<unsigned>(k * t.multiplicity)), t.prime});
  }
  std::vector<MonomialIdeal> parts;
  for (const auto& c : out.components) parts.push_back(c.ideal);
  out.verified = intersection_equals(power(transversal_build(spec), k), parts);
  return out;
}

BracketAss bracket_ass_transversal(const TransversalSpec& spec, unsigned k) {
  if (k == 0) throw InvalidArgument("bracket power must be positive");
  BracketAss out;
  out.primes = associated_primes(bracket_power(transversal_build(spec), k));
  out.matches = out.primes == transversal_ass(spec);
  return out;
}

CmReport cm_check_transversal(const TransversalSpec& spec) {
  validate(spec);
  if (!covers_ground_set(spec)) throw InvalidArgument("Cohen-Macaulay check needs the subsets to cover [n]");
  const MonomialIdeal l = transversal_build(spec);
  CmReport r;
  r.dim = dim_quotient(l);
  r.depth = depth_quotient(l);
  r.is_cm = r.dim == r.depth;
  const bool all_full = std::all_of(spec.subsets.begin(), spec.subsets.end(),
                                    [&](const auto& f) { return f.size() == spec.n; });
  const bool all_single = std::all_of(spec.subsets.begin(), spec.subsets.end(),
                                      [](const auto& f) { return f.size() == 1; });
  r.extremal = all_full || all_single;
  return r;
}

Instance make_instance(const TransversalSpec& spec) {
  return Instance{transversal_build(spec), Provenance::transversal, spec, std::nullopt, std::nullopt};
}

Instance make_instance(CappedParams params) {
  return Instance{capped_veronese_gmp(params.m1, params.m2, params.d), Provenance::capped_veronese_gmp,
                  std::nullopt, params, capped_veronese_gmp_spec(params.m1, params.m2, params.d)};
}

}  // namespace monideal
