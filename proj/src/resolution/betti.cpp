// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

#include "monideal/error.hpp"
#include "monideal/limits.hpp"
#include "monideal/membership.hpp"
#include "monideal/resolution.hpp"
#include "monideal/simplicial.hpp"

namespace monideal {

namespace {

unsigned total(std::span<const Exponent> a) {
  return std::accumulate(a.begin(), a.end(), 0u);
}

bool degree_lex_less(const Multidegree& a, const Multidegree& b) {
  const unsigned da = total(a);
  const unsigned db = total(b);
  return da != db ? da < db : a > b;
}

void require_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw ZeroOrUnitIdeal(std::string(op) + " of the zero ideal");
}

std::vector<Multidegree> lattice_by_box(const MonomialIdeal& ideal, const Box& box) {
  const std::size_t n = box.dims();
  std::vector<Exponent> d(box.size() * n, 0);
  std::vector<std::uint8_t> reached(box.size(), 0);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const std::size_t idx = box.index(ideal.row(i));
    reached[idx] = 1;
    std::copy_n(ideal.row(i), n, d.begin() + static_cast<std::ptrdiff_t>(idx * n));
  }
  // d[c] = lcm of the generators dividing x^c, pulled up from c - e_j.
  std::vector<Multidegree> out;
  std::vector<Exponent> c(n, 0);
  std::size_t idx = 0;
  do {
    Exponent* dc = d.data() + idx * n;
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      const std::size_t below = idx - box.radix(j);
      if (!reached[below]) continue;
      reached[idx] = 1;
      const Exponent* db = d.data() + below * n;
      for (std::size_t v = 0; v < n; ++v) dc[v] = std::max(dc[v], db[v]);
    }
    if (reached[idx] && std::equal(c.begin(), c.end(), dc)) {
      if (out.size() >= limits().max_lattice) throw ResourceLimit("lcm lattice exceeds max_lattice");
      out.push_back(c);
    }
    ++idx;
  } while (box.next(c.data()));
  std::sort(out.begin(), out.end(), degree_lex_less);
  return out;
}

}  // namespace

std::vector<Multidegree> lcm_lattice_by_closure(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "lcm lattice");
  const std::size_t n = ideal.ring()->total_vars();
  std::vector<Multidegree> gens;
  for (std::size_t i = 0; i < ideal.size(); ++i) gens.emplace_back(ideal.row(i), ideal.row(i) + n);
  std::set<Multidegree> seen(gens.begin(), gens.end());
  std::vector<Multidegree> frontier = gens;
  while (!frontier.empty()) {
    std::vector<Multidegree> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        Multidegree c(n);
        for (std::size_t v = 0; v < n; ++v) c[v] = std::max(a[v], g[v]);
        if (!seen.insert(c).second) continue;
        if (seen.size() > limits().max_lattice) throw ResourceLimit("lcm lattice exceeds max_lattice");
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Multidegree> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), degree_lex_less);
  return out;
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal) {
  require_nonzero(ideal, "lcm lattice");
  const std::size_t n = ideal.ring()->total_vars();
  const Monomial l = lcm_of_generators(ideal);
  // The table stores n lanes per box point.
  const auto box = Box::make(l.exponents(), limits().max_box / std::max<std::size_t>(n, 1));
  if (box) return lattice_by_box(ideal, *box);
  return lcm_lattice_by_closure(ideal);
}

BettiTable::BettiTable(RingPtr ring, Field field, std::vector<BettiEntry> entries)
    : ring_(std::move(ring)), field_(field), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.total_degree != b.total_degree) return a.total_degree < b.total_degree;
    return a.multidegree > b.multidegree;
  });
}

std::size_t BettiTable::beta(unsigned i, std::span<const Exponent> multidegree) const {
  for (const auto& e : entries_) {
    if (e.i == i && std::equal(e.multidegree.begin(), e.multidegree.end(), multidegree.begin(),
                               multidegree.end())) {
      return e.rank;
    }
  }
  return 0;
}

std::size_t BettiTable::total(unsigned i) const {
  std::size_t sum = 0;
  for (const auto& e : entries_) {
    if (e.i == i) sum += e.rank;
  }
  return sum;
}

std::map<std::pair<unsigned, unsigned>, std::size_t> BettiTable::graded() const {
  std::map<std::pair<unsigned, unsigned>, std::size_t> out;
  for (const auto& e : entries_) out[{e.i, e.total_degree}] += e.rank;
  return out;
}

int BettiTable::max_index() const {
  int top = -1;
  for (const auto& e : entries_) top = std::max(top, static_cast<int>(e.i));
  return top;
}

int BettiTable::regularity() const {
  int reg = -1;
  for (const auto& e : entries_) {
    reg = std::max(reg, static_cast<int>(e.total_degree) - static_cast<int>(e.i));
  }
  return reg;
}

BettiTable betti_table(const MonomialIdeal& ideal, Field field) {
  require_nonzero(ideal, "Betti numbers");
  const std::size_t n = ideal.ring()->total_vars();
  const MembershipTable table(ideal);
  std::vector<BettiEntry> entries;
  std::vector<Exponent> exps(n);
  for (const auto& a : lcm_lattice(ideal)) {
    std::vector<std::size_t> supp;
    for (std::size_t v = 0; v < n; ++v) {
      if (a[v] != 0) supp.push_back(v);
    }
    if (supp.size() > 24 || (std::size_t{1} << supp.size()) > limits().max_faces) {
      throw ResourceLimit("upper Koszul complex exceeds max_faces");
    }
    std::vector<SimplicialComplex::Face> faces;
    for (SimplicialComplex::Face b = 0; b < (SimplicialComplex::Face{1} << supp.size()); ++b) {
      std::copy(a.begin(), a.end(), exps.begin());
      for (std::size_t k = 0; k < supp.size(); ++k) {
        if (b >> k & 1) --exps[supp[k]];
      }
      if (table.contains(exps.data())) faces.push_back(b);
    }
    const SimplicialComplex k(std::move(faces));
    if (k.faces().size() > 64 && k.is_cone()) continue;
    const auto h = k.reduced_homology(field);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] != 0) entries.push_back({static_cast<unsigned>(i), a, total(a), h[i]});
    }
  }
  return BettiTable(ideal.ring(), field, std::move(entries));
}

BettiTable betti_oracle(const MonomialIdeal& ideal, Field field) {
  require_nonzero(ideal, "Betti numbers");
  const std::size_t n = ideal.ring()->total_vars();
  if (n > 12 || ideal.size() > 12) {
    throw ResourceLimit("Betti oracle is limited to 12 variables and 12 generators");
  }
  const Monomial l = lcm_of_generators(ideal);
  const auto box = Box::make(l.exponents(), limits().max_witness_box);
  if (!box) throw ResourceLimit("Betti oracle box exceeds max_witness_box");

  std::vector<BettiEntry> entries;
  std::vector<Exponent> a(ideal.stride(), 0);
  std::vector<Exponent> m(ideal.stride(), 0);
  // Is x^{a-b} a nonzero element of T/I?
  auto standard = [&](std::uint32_t b) {
    std::copy(a.begin(), a.end(), m.begin());
    for (std::size_t v = 0; v < n; ++v) {
      if (b >> v & 1) --m[v];
    }
    return !ideal.contains_row(m.data());
  };
  do {
    std::uint32_t supp = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (a[v] != 0) supp |= std::uint32_t{1} << v;
    }
    if (supp == 0) continue;
    // basis[t]: squarefree b <= a with |b| = t and x^{a-b} standard.
    std::vector<std::vector<std::uint32_t>> basis(n + 2);
    for (std::uint32_t b = supp;; b = (b - 1) & supp) {
      if (standard(b)) basis[static_cast<std::size_t>(std::popcount(b))].push_back(b);
      if (b == 0) break;
    }
    // ranks[t] = rank of C_t -> C_{t-1}.
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t t = 1; t <= n; ++t) {
      const auto& src = basis[t];
      const auto& dst = basis[t - 1];
      if (src.empty() || dst.empty()) continue;
      std::unordered_map<std::uint32_t, std::size_t> row_of;
      for (std::size_t r = 0; r < dst.size(); ++r) row_of.emplace(dst[r], r);
      IntMatrix mat(dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        std::int64_t sign = 1;
        for (std::size_t v = 0; v < n; ++v) {
          if (!(src[c] >> v & 1)) continue;
          // e_b (x) x^{a-b} -> e_{b-v} (x) x_v x^{a-b}; dropped when that is in I.
          auto it = row_of.find(src[c] & ~(std::uint32_t{1} << v));
          if (it != row_of.end()) mat.at(it->second, c) = sign;
          sign = -sign;
        }
      }
      ranks[t] = rank(mat, field);
    }
    for (std::size_t t = 1; t <= n; ++t) {
      const std::size_t h = basis[t].size() - ranks[t] - ranks[t + 1];
      if (h != 0) {
        entries.push_back({static_cast<unsigned>(t - 1), Multidegree(a.begin(), a.begin() + n),
                           total(std::span<const Exponent>(a.data(), n)), h});
      }
    }
  } while (box->next(a.data()));
  return BettiTable(ideal.ring(), field, std::move(entries));
}

}  // namespace monideal
