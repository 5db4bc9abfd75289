// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <numeric>

#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/resolution.hpp"

namespace monideal {

std::size_t projective_dimension(const MonomialIdeal& ideal, Field field) {
  return static_cast<std::size_t>(betti_table(ideal, field).max_index()) + 1;
}

std::size_t depth_quotient(const MonomialIdeal& ideal, Field field) {
  return ideal.ring()->total_vars() - projective_dimension(ideal, field);
}

int regularity(const MonomialIdeal& ideal, Field field) {
  return betti_table(ideal, field).regularity();
}

LinearityReport linear_resolution_report(const BettiTable& table, const MonomialIdeal& ideal) {
  LinearityReport report;
  report.degree = generated_in_single_degree(ideal);
  if (!report.degree) {
    report.reason = "generators have more than one degree";
    return report;
  }
  for (const auto& e : table.entries()) {
    if (e.total_degree != e.i + *report.degree) {
      report.reason = "beta_" + std::to_string(e.i) + " is nonzero in degree " +
                      std::to_string(e.total_degree);
      return report;
    }
  }
  report.linear = true;
  return report;
}

LinearityReport linear_resolution_report(const MonomialIdeal& ideal, Field field) {
  return linear_resolution_report(betti_table(ideal, field), ideal);
}

bool has_linear_resolution(const MonomialIdeal& ideal, Field field) {
  return linear_resolution_report(ideal, field).linear;
}

std::vector<std::size_t> quotient_order(const MonomialIdeal& ideal, QuotientOrder order) {
  std::vector<std::size_t> idx(ideal.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<unsigned> deg(ideal.size());
  const std::size_t n = ideal.ring()->total_vars();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    deg[i] = std::accumulate(ideal.row(i), ideal.row(i) + n, 0u);
  }
  // Generators are stored lex descending, so index order is lex order.
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (deg[a] != deg[b]) return deg[a] < deg[b];
    return order == QuotientOrder::lex_descending ? a < b : a > b;
  });
  return idx;
}

bool has_linear_quotients(const MonomialIdeal& ideal, QuotientOrder order) {
  const auto idx = quotient_order(ideal, order);
  return has_linear_quotients(ideal, idx);
}

bool has_linear_quotients(const MonomialIdeal& ideal, std::span<const std::size_t> order) {
  if (ideal.is_zero()) throw ZeroOrUnitIdeal("linear quotients of the zero ideal");
  if (order.size() != ideal.size()) throw InvalidArgument("order must list every generator once");
  std::vector<bool> used(ideal.size(), false);
  for (std::size_t i : order) {
    if (i >= ideal.size() || used[i]) throw InvalidArgument("order must list every generator once");
    used[i] = true;
  }
  const std::size_t n = ideal.ring()->total_vars();
  std::vector<Exponent> q(n);
  for (std::size_t j = 1; j < order.size(); ++j) {
    const Exponent* u = ideal.row(order[j]);
    // The colon is generated by the u_i / gcd(u_i, u_j); it is generated by
    // variables iff every such quotient is divisible by one that is a variable.
    std::vector<bool> linear(n, false);
    std::vector<std::vector<Exponent>> quotients;
    for (std::size_t i = 0; i < j; ++i) {
      const Exponent* w = ideal.row(order[i]);
      unsigned degree = 0;
      std::size_t last = 0;
      for (std::size_t v = 0; v < n; ++v) {
        q[v] = w[v] > u[v] ? static_cast<Exponent>(w[v] - u[v]) : 0;
        if (q[v] != 0) last = v;
        degree += q[v];
      }
      if (degree == 1) linear[last] = true;
      else quotients.push_back(q);
    }
    for (const auto& r : quotients) {
      bool hit = false;
      for (std::size_t v = 0; v < n && !hit; ++v) hit = r[v] != 0 && linear[v];
      if (!hit) return false;
    }
  }
  return true;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, Field field) {
  return depth_quotient(ideal, field) == dim_quotient(ideal);
}

DepthStability dstab(const MonomialIdeal& ideal, unsigned k_max, Provenance provenance, Field field) {
  if (k_max == 0) throw InvalidArgument("k_max must be positive");
  DepthStability s;
  s.k_max = k_max;
  MonomialIdeal current = ideal;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (k > 1) current = product(current, ideal);
    s.per_power.push_back(depth_quotient(current, field));
  }
  s.index = k_max;
  while (s.index > 1 && s.per_power[s.index - 2] == s.per_power[k_max - 1]) --s.index;
  s.limit_depth = s.per_power.back();
  s.proven = provenance == Provenance::transversal;
  return s;
}

std::size_t analytic_spread_transversal(const MonomialIdeal& ideal, Provenance provenance, Field field) {
  if (provenance != Provenance::transversal) {
    throw InvalidArgument("analytic spread is only available for transversal polymatroidal ideals");
  }
  return ideal.ring()->total_vars() - depth_quotient(ideal, field);
}

}  // namespace monideal
