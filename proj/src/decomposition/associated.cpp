// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <map>
#include <optional>

#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/limits.hpp"
#include "monideal/membership.hpp"

namespace monideal {

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal)) primes.push_back(c.radical());
  canonicalize(primes);
  return primes;
}

namespace {

// The support of `q` when q is generated by variables, else nullopt.
std::optional<std::vector<std::size_t>> prime_support(const MonomialIdeal& q) {
  if (q.is_zero() || q.is_unit()) return std::nullopt;
  const std::size_t n = q.ring()->total_vars();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Exponent* row = q.row(i);
    std::size_t var = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (row[v] == 0) continue;
      if (row[v] != 1 || var != n) return std::nullopt;
      var = v;
    }
    vars.push_back(var);
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace

std::vector<AssWitness> ass_oracle_witnesses(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroOrUnitIdeal("associated primes of the zero ideal");
  if (ideal.is_unit()) throw ZeroOrUnitIdeal("associated primes of the unit ideal");
  const Monomial l = lcm_of_generators(ideal);
  const auto box = Box::make(l.exponents(), limits().max_witness_box);
  if (!box) throw ResourceLimit("witness box exceeds max_witness_box");

  const RingPtr& ring = ideal.ring();
  std::map<std::vector<std::size_t>, AssWitness> found;
  std::vector<Exponent> f(ring->stride(), 0);
  do {
    const Monomial m = Monomial::from_row(ring, f.data());
    if (ideal.contains(m)) continue;
    const auto vars = prime_support(colon(ideal, m));
    if (!vars) continue;
    auto it = found.find(*vars);
    if (it == found.end()) {
      found.emplace(*vars, AssWitness{MonomialPrime(ring, *vars), m, 1});
      continue;
    }
    ++it->second.witness_count;
    if (m.degree() < it->second.witness.degree()) it->second.witness = m;
  } while (box->next(f.data()));

  std::vector<AssWitness> out;
  for (auto& [vars, w] : found) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(),
            [](const AssWitness& a, const AssWitness& b) { return a.prime < b.prime; });
  return out;
}

std::vector<MonomialPrime> ass_oracle(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> primes;
  for (auto& w : ass_oracle_witnesses(ideal)) primes.push_back(std::move(w.prime));
  return primes;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> radicals;
  std::vector<std::vector<MonomialIdeal>> groups;
  for (const auto& c : irreducible_decomposition(ideal)) {
    const MonomialPrime p = c.radical();
    auto it = std::find(radicals.begin(), radicals.end(), p);
    if (it == radicals.end()) {
      radicals.push_back(p);
      groups.emplace_back();
      it = radicals.end() - 1;
    }
    groups[static_cast<std::size_t>(it - radicals.begin())].push_back(c.ideal());
  }
  std::vector<PrimaryComponent> out;
  for (std::size_t i = 0; i < radicals.size(); ++i) {
    out.push_back({intersect_all(groups[i]), radicals[i]});
  }
  std::sort(out.begin(), out.end(),
            [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.radical < b.radical; });
  return out;
}

bool intersection_equals(const MonomialIdeal& ideal, std::span<const MonomialIdeal> parts) {
  if (parts.empty()) throw InvalidArgument("intersection of no ideals");
  for (const auto& p : parts) require_same_ring(ideal.ring(), p.ring(), "intersection_equals");
  if (ideal.is_zero() || ideal.is_unit()) return intersect_all(parts) == ideal;
  for (const auto& p : parts) {
    if (!is_subset(ideal, p)) return false;
  }
  // Irreducible ideals are meet-irreducible: a finite intersection lies in C
  // iff one of the parts does.
  for (const auto& c : irreducible_decomposition(ideal)) {
    const bool covered = std::any_of(parts.begin(), parts.end(), [&](const MonomialIdeal& p) {
      if (p.is_zero()) return true;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (!c.contains_row(p.row(i))) return false;
      }
      return true;
    });
    if (!covered) return false;
  }
  return true;
}

}  // namespace monideal
