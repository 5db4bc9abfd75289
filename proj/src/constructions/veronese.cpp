// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <numeric>

#include "monideal/constructions.hpp"
#include "monideal/error.hpp"
#include "monideal/membership.hpp"

namespace monideal {

namespace {

// Appends every exponent vector on `vars` with |a| = degree and a_j <= cap,
// in lex descending order.
void compositions(std::size_t stride, const std::vector<std::size_t>& vars,
                  const std::vector<unsigned>& caps, unsigned degree, std::vector<Exponent>& rows) {
  std::vector<unsigned> suffix(vars.size() + 1, 0);
  for (std::size_t j = vars.size(); j-- > 0;) suffix[j] = suffix[j + 1] + caps[j];
  std::vector<Exponent> row(stride, 0);
  auto rec = [&](auto& self, std::size_t j, unsigned left) -> void {
    if (j == vars.size()) {
      if (left == 0) rows.insert(rows.end(), row.begin(), row.end());
      return;
    }
    const unsigned hi = std::min(caps[j], left);
    const unsigned lo = left > suffix[j + 1] ? left - suffix[j + 1] : 0;
    for (unsigned e = hi + 1; e-- > lo;) {
      row[vars[j]] = static_cast<Exponent>(e);
      self(self, j + 1, left - e);
    }
    row[vars[j]] = 0;
  };
  rec(rec, 0, degree);
}

}  // namespace

void validate(const VeroneseSpec& spec) {
  if (spec.caps.empty()) throw InvalidArgument("Veronese type needs at least one variable");
  unsigned total = 0;
  for (unsigned r : spec.caps) {
    if (r < 1 || r > spec.degree) {
      throw InvalidArgument("Veronese type needs 1 <= r_j <= d for every j");
    }
    total += r;
  }
  if (spec.degree > total) throw InvalidArgument("Veronese type needs d <= r_1 + ... + r_n");
}

MonomialIdeal veronese_type(const VeroneseSpec& spec) {
  validate(spec);
  const RingPtr ring = BlockedRing::plain(spec.caps.size());
  std::vector<std::size_t> vars(spec.caps.size());
  std::iota(vars.begin(), vars.end(), 0);
  std::vector<Exponent> rows;
  compositions(ring->stride(), vars, spec.caps, spec.degree, rows);
  return MonomialIdeal::from_rows(ring, std::move(rows));
}

MonomialIdeal block_veronese(const RingPtr& ring, std::size_t block, unsigned cap, unsigned degree) {
  if (block >= ring->num_blocks()) throw InvalidArgument("block index out of range");
  if (degree == 0) return MonomialIdeal::unit(ring);
  const std::size_t size = ring->block_size(block);
  std::vector<std::size_t> vars(size);
  std::iota(vars.begin(), vars.end(), ring->block_offset(block));
  const std::vector<unsigned> caps(size, std::min(cap, degree));
  std::vector<Exponent> rows;
  compositions(ring->stride(), vars, caps, degree, rows);
  return MonomialIdeal::from_rows(ring, std::move(rows));
}

MonomialIdeal capped_veronese_gmp(unsigned m1, unsigned m2, unsigned d) {
  if (m1 < 2 || m2 < 2) throw InvalidArgument("capped Veronese GMP needs m1, m2 >= 2");
  if (d < 2 || d > 2 * m1 + 2 * m2) throw InvalidArgument("capped Veronese GMP needs 2 <= d <= 2m1+2m2");
  const RingPtr ring = BlockedRing::make({m1, m2});
  MonomialIdeal sum_ideal = MonomialIdeal::zero(ring);
  bool any = false;
  for (unsigned h1 = 1; h1 <= 2 * m1; ++h1) {
    if (h1 >= d || d - h1 > 2 * m2) continue;
    any = true;
    sum_ideal = sum(sum_ideal, product(block_veronese(ring, 0, 2, h1), block_veronese(ring, 1, 2, d - h1)));
  }
  if (!any) throw InvalidArgument("capped Veronese GMP sum is empty");
  return sum_ideal;
}

PolymatroidReport polymatroid_report(const MonomialIdeal& ideal) {
  PolymatroidReport report;
  if (ideal.is_zero()) {
    report.reason = "zero ideal";
    return report;
  }
  if (!generated_in_single_degree(ideal)) {
    report.reason = "generators have more than one degree";
    return report;
  }
  const std::size_t n = ideal.ring()->total_vars();
  const MembershipTable table(ideal);
  std::vector<Exponent> w(ideal.stride());
  for (std::size_t a = 0; a < ideal.size(); ++a) {
    const Exponent* u = ideal.row(a);
    for (std::size_t b = 0; b < ideal.size(); ++b) {
      const Exponent* v = ideal.row(b);
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < n && !exchanged; ++j) {
          if (u[j] >= v[j]) continue;
          std::copy_n(u, ideal.stride(), w.begin());
          --w[i];
          ++w[j];
          exchanged = table.contains(w.data());
        }
        if (!exchanged) {
          report.reason = "no exchange for " + ideal.generator(a).to_string() + ", " +
                          ideal.generator(b).to_string() + " at " + ideal.ring()->variable_name(i);
          return report;
        }
      }
    }
  }
  report.polymatroidal = true;
  return report;
}

bool is_polymatroidal(const MonomialIdeal& ideal) { return polymatroid_report(ideal).polymatroidal; }

}  // namespace monideal
