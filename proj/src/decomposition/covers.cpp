// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <bit>
#include <cstdint>

#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/limits.hpp"

namespace monideal {

namespace {

using Mask = std::uint32_t;

class CoverSearch {
 public:
  explicit CoverSearch(std::vector<Mask> edges) : edges_(std::move(edges)) {}

  std::vector<Mask> run() {
    search(0, 0);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    std::vector<Mask> out;
    for (Mask c : found_) {
      if (minimal(c)) out.push_back(c);
    }
    return out;
  }

 private:
  // `forbidden` holds vertices excluded by earlier sibling branches, so each
  // cover is reached along one path.
  void search(Mask chosen, Mask forbidden) {
    const auto open = std::find_if(edges_.begin(), edges_.end(),
                                   [&](Mask e) { return (e & chosen) == 0; });
    if (open == edges_.end()) {
      found_.push_back(chosen);
      return;
    }
    Mask options = *open & ~forbidden;
    Mask excluded = forbidden;
    while (options != 0) {
      const Mask v = options & (~options + 1);
      options &= options - 1;
      search(chosen | v, excluded);
      excluded |= v;
    }
  }

  bool minimal(Mask c) const {
    for (Mask rest = c; rest != 0; rest &= rest - 1) {
      const Mask v = rest & (~rest + 1);
      const bool needed = std::any_of(edges_.begin(), edges_.end(),
                                      [&](Mask e) { return (e & c) == v; });
      if (!needed) return false;
    }
    return true;
  }

  std::vector<Mask> edges_;
  std::vector<Mask> found_;
};

}  // namespace

std::vector<std::vector<std::size_t>> minimal_vertex_covers(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroOrUnitIdeal("vertex covers of the zero ideal");
  if (ideal.is_unit()) throw ZeroOrUnitIdeal("vertex covers of the unit ideal");
  const std::vector<std::size_t> supp = support(ideal);
  if (supp.size() > limits().max_cover_support || supp.size() > 32) {
    throw ResourceLimit("support exceeds max_cover_support");
  }
  const std::size_t n = ideal.ring()->total_vars();
  std::vector<std::size_t> bit_of(n, 0);
  for (std::size_t b = 0; b < supp.size(); ++b) bit_of[supp[b]] = b;

  std::vector<Mask> edges;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    Mask e = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (ideal.row(i)[v] != 0) e |= Mask{1} << bit_of[v];
    }
    edges.push_back(e);
  }
  // Only inclusion-minimal supports constrain a cover.
  std::sort(edges.begin(), edges.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Mask> reduced;
  for (Mask e : edges) {
    if (std::none_of(reduced.begin(), reduced.end(), [&](Mask r) { return (r & e) == r; })) {
      reduced.push_back(e);
    }
  }

  std::vector<std::vector<std::size_t>> covers;
  for (Mask c : CoverSearch(std::move(reduced)).run()) {
    std::vector<std::size_t> vars;
    for (Mask rest = c; rest != 0; rest &= rest - 1) {
      vars.push_back(supp[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    covers.push_back(std::move(vars));
  }
  std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return covers;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> primes;
  for (auto& c : minimal_vertex_covers(ideal)) primes.emplace_back(ideal.ring(), std::move(c));
  return primes;
}

std::size_t height(const MonomialIdeal& ideal) {
  return minimal_vertex_covers(ideal).front().size();
}

std::size_t dim_quotient(const MonomialIdeal& ideal) {
  return ideal.ring()->total_vars() - height(ideal);
}

bool is_unmixed(const MonomialIdeal& ideal) {
  const auto covers = minimal_vertex_covers(ideal);
  for (const auto& c : covers) {
    if (c.size() != covers.front().size()) return false;
  }
  return true;
}

}  // namespace monideal
