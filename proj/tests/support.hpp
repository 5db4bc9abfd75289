// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/expression.hpp"
#include "monideal/ideal.hpp"
#include "monideal/monomial.hpp"
#include "monideal/prime.hpp"
#include "monideal/ring.hpp"

namespace monideal::test {

using Exps = std::vector<unsigned>;

inline MonomialIdeal ideal_of(std::string_view text) { return evaluate(text).ideal; }

inline std::vector<Exps> exponent_rows(const MonomialIdeal& ideal) {
  std::vector<Exps> out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const Exponent* row = ideal.row(i);
    out.emplace_back(row, row + ideal.ring()->total_vars());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> prime_names(const std::vector<MonomialPrime>& primes) {
  std::vector<std::string> out;
  for (const auto& p : primes) out.push_back(p.to_string());
  return out;
}

// Naive membership: some generator divides x^e.
inline bool naive_contains(const std::vector<Exps>& gens, const Exps& e) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (g[j] > e[j]) return false;
    }
    return true;
  });
}

// Calls f on every exponent vector with 0 <= e_j <= bound_j.
inline void for_each_point(const Exps& bounds, const std::function<void(const Exps&)>& f) {
  Exps e(bounds.size(), 0);
  while (true) {
    f(e);
    std::size_t j = 0;
    while (j < e.size() && e[j] == bounds[j]) e[j++] = 0;
    if (j == e.size()) return;
    ++e[j];
  }
}

inline Exps uniform_bounds(std::size_t n, unsigned b) { return Exps(n, b); }

// Fixed-seed generator of small monomial ideals.
class RandomIdeals {
 public:
  explicit RandomIdeals(std::uint64_t seed) : rng_(seed) {}

  unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

  Monomial monomial(const RingPtr& ring, unsigned max_exp, bool allow_one = false) {
    while (true) {
      Exps e(ring->total_vars());
      for (auto& x : e) x = uniform(0, max_exp);
      Monomial m(ring, e);
      if (allow_one || !m.is_one()) return m;
    }
  }

  // A proper nonzero ideal with 1..max_gens generators.
  MonomialIdeal ideal(const RingPtr& ring, std::size_t max_gens, unsigned max_exp) {
    std::vector<Monomial> gens;
    const unsigned count = uniform(1, static_cast<unsigned>(max_gens));
    for (unsigned i = 0; i < count; ++i) gens.push_back(monomial(ring, max_exp));
    return MonomialIdeal(ring, gens);
  }

  MonomialIdeal squarefree(const RingPtr& ring, std::size_t max_gens) { return ideal(ring, max_gens, 1); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace monideal::test
