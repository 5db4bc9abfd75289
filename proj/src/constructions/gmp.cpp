// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <set>

#include "monideal/constructions.hpp"
#include "monideal/error.hpp"

namespace monideal {

GmpFamily GmpFamily::capped(unsigned cap) {
  if (cap == 0) throw InvalidArgument("family cap must be positive");
  return GmpFamily(Kind::capped, cap);
}

void GmpFamily::set(std::size_t block, unsigned exponent, MonomialIdeal ideal) {
  if (kind_ != Kind::explicit_entries) throw InvalidArgument("only explicit families take entries");
  const RingPtr& ring = ideal.ring();
  if (block >= ring->num_blocks()) throw InvalidArgument("family entry block out of range");
  for (std::size_t v : support(ideal)) {
    if (ring->block_of(v) != block) {
      throw InvalidArgument("family entry for block " + std::to_string(block + 1) +
                            " uses variable " + ring->variable_name(v));
    }
  }
  entries_.insert_or_assign({block, exponent}, std::move(ideal));
}

MonomialIdeal GmpFamily::entry(const RingPtr& ring, std::size_t block, unsigned exponent) const {
  if (exponent == 0) return MonomialIdeal::unit(ring);
  switch (kind_) {
    case Kind::capped:
    case Kind::squarefree:
      return block_veronese(ring, block, cap_, exponent);
    case Kind::veronese:
      return block_veronese(ring, block, exponent, exponent);
    case Kind::explicit_entries:
      break;
  }
  auto it = entries_.find({block, exponent});
  if (it == entries_.end()) {
    throw MissingFamilyEntry("no family entry for block " + std::to_string(block + 1) +
                             ", exponent " + std::to_string(exponent));
  }
  require_same_ring(ring, it->second.ring(), "family entry");
  return it->second;
}

RingPtr gmp_ring(const GmpSpec& spec) {
  if (spec.blocks.size() != spec.base.ring()->total_vars()) {
    throw InvalidArgument("need one block size per variable of the base ideal");
  }
  return BlockedRing::make(spec.blocks);
}

namespace {

// Exponents of each variable over G(base), 0 included when it occurs.
std::vector<std::vector<unsigned>> occurring_exponents(const MonomialIdeal& base) {
  const std::size_t n = base.ring()->total_vars();
  std::vector<std::set<unsigned>> seen(n);
  for (std::size_t g = 0; g < base.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) seen[i].insert(base.row(g)[i]);
  }
  std::vector<std::vector<unsigned>> out;
  for (const auto& s : seen) out.emplace_back(s.begin(), s.end());
  return out;
}

MonomialIdeal build_from(const RingPtr& ring, const MonomialIdeal& base, const GmpFamily& family) {
  const std::size_t n = base.ring()->total_vars();
  MonomialIdeal result = MonomialIdeal::zero(ring);
  for (std::size_t g = 0; g < base.size(); ++g) {
    MonomialIdeal term = MonomialIdeal::unit(ring);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      term = product(term, family.entry(ring, i, base.row(g)[i]));
    }
    result = sum(result, term);
  }
  return result;
}

}  // namespace

GmpReport gmp_validate(const GmpSpec& spec) {
  const RingPtr ring = gmp_ring(spec);
  const auto exps = occurring_exponents(spec.base);
  GmpReport report;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::map<unsigned, MonomialIdeal> entry;
    for (unsigned a : exps[i]) entry.emplace(a, spec.family.entry(ring, i, a));
    for (unsigned a : exps[i]) {
      for (unsigned b : exps[i]) {
        if (a > b && !is_subset(entry.at(a), entry.at(b))) report.inclusion.push_back({i, a, b});
      }
    }
    std::map<std::pair<unsigned, unsigned>, MonomialIdeal> prod;
    for (unsigned a : exps[i]) {
      for (unsigned b : exps[i]) {
        if (a <= b) prod.emplace(std::pair{a, b}, product(entry.at(a), entry.at(b)));
      }
    }
    for (const auto& [ab, left] : prod) {
      for (const auto& [cd, right] : prod) {
        if (ab == cd || ab.first + ab.second < cd.first + cd.second) continue;
        if (!is_subset(left, right)) {
          report.product.push_back({i, ab.first, ab.second, cd.first, cd.second});
        }
      }
    }
  }
  return report;
}

MonomialIdeal gmp_build(const GmpSpec& spec, bool strict) {
  const RingPtr ring = gmp_ring(spec);
  if (strict) {
    const GmpReport report = gmp_validate(spec);
    if (!report.inclusion.empty()) {
      const auto& v = report.inclusion.front();
      throw InclusionViolation("L_{" + std::to_string(v.block + 1) + "," + std::to_string(v.larger) +
                               "} is not contained in L_{" + std::to_string(v.block + 1) + "," +
                               std::to_string(v.smaller) + "}");
    }
  }
  return build_from(ring, spec.base, spec.family);
}

namespace {

// Every way of writing `target` as a sum of k generators of `base`, as
// nondecreasing index lists starting at `from`.
void splittings(const MonomialIdeal& base, std::vector<Exponent>& target, unsigned k, std::size_t from,
                std::vector<std::size_t>& picked, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = base.ring()->total_vars();
  for (std::size_t g = from; g < base.size(); ++g) {
    const Exponent* u = base.row(g);
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i) fits = u[i] <= target[i];
    if (!fits) continue;
    if (k == 1) {
      if (std::equal(u, u + n, target.begin())) {
        picked.push_back(g);
        out.push_back(picked);
        picked.pop_back();
      }
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<Exponent>(target[i] - u[i]);
    picked.push_back(g);
    splittings(base, target, k - 1, g, picked, out);
    picked.pop_back();
    for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<Exponent>(target[i] + u[i]);
  }
}

}  // namespace

PowerIdentity gmp_power_identity(const GmpSpec& spec, unsigned k, bool strict) {
  if (k == 0) throw InvalidArgument("power must be positive");
  const GmpReport report = strict ? gmp_validate(spec) : GmpReport{};
  if (!report.product.empty()) {
    const auto& v = report.product.front();
    auto name = [&](unsigned e) { return "L_{" + std::to_string(v.block + 1) + "," + std::to_string(e) + "}"; };
    throw Condition5Violation(name(v.a) + name(v.b) + " is not contained in " + name(v.c) + name(v.d));
  }
  const RingPtr ring = gmp_ring(spec);
  const std::size_t n = spec.base.ring()->total_vars();
  const MonomialIdeal base_k = power(spec.base, k);

  // Under the product condition every splitting c = a_1 + ... + a_k gives the
  // same L_{i,c}. Without it the splitting whose term contains all the
  // others is used; if none does, no choice can make the identity hold.
  PowerIdentity out{true, MonomialIdeal::zero(ring), MonomialIdeal::zero(ring)};
  std::vector<Exponent> target(n);
  for (std::size_t g = 0; g < base_k.size(); ++g) {
    std::copy_n(base_k.row(g), n, target.begin());
    std::vector<std::size_t> picked;
    std::vector<std::vector<std::size_t>> all;
    splittings(spec.base, target, k, 0, picked, all);
    if (all.empty()) throw InvalidArgument("generator of the power does not split into generators");
    std::vector<MonomialIdeal> terms;
    for (const auto& split : all) {
      MonomialIdeal term = MonomialIdeal::unit(ring);
      for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
        for (std::size_t p : split) term = product(term, spec.family.entry(ring, i, spec.base.row(p)[i]));
      }
      terms.push_back(std::move(term));
    }
    auto dominant = std::find_if(terms.begin(), terms.end(), [&](const MonomialIdeal& t) {
      return std::all_of(terms.begin(), terms.end(), [&](const MonomialIdeal& o) { return is_subset(o, t); });
    });
    if (dominant == terms.end()) {
      out.holds = false;
      dominant = terms.begin();
    }
    out.left = sum(out.left, *dominant);
  }
  out.right = power(build_from(ring, spec.base, spec.family), k);
  out.holds = out.holds && out.left == out.right;
  return out;
}

GmpSpec capped_veronese_gmp_spec(unsigned m1, unsigned m2, unsigned d) {
  if (m1 < 2 || m2 < 2) throw InvalidArgument("capped Veronese GMP needs m1, m2 >= 2");
  if (d < 2 || d > 2 * m1 + 2 * m2) throw InvalidArgument("capped Veronese GMP needs 2 <= d <= 2m1+2m2");
  const RingPtr plain = BlockedRing::plain(2);
  std::vector<Monomial> gens;
  for (unsigned h1 = 1; h1 <= 2 * m1; ++h1) {
    if (h1 < d && d - h1 <= 2 * m2) gens.emplace_back(plain, std::initializer_list<unsigned>{h1, d - h1});
  }
  return GmpSpec{MonomialIdeal(plain, gens), {m1, m2}, GmpFamily::capped(2)};
}

}  // namespace monideal
