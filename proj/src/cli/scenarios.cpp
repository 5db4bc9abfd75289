// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <functional>
#include <map>

#include "monideal/commands.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/expression.hpp"
#include "monideal/linalg.hpp"
#include "monideal/resolution.hpp"

namespace monideal {

namespace {

const std::vector<std::pair<std::string, std::string>>& scenario_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"ass-theorem", "capped Veronese GMP: P_F in Ass(L) iff |F| <= 2 at d = 2m1+2m2-1"},
      {"dim-theorem", "capped Veronese GMP: dim(T/L) for m1 = m2 = q"},
      {"unmixed-theorem", "capped Veronese GMP: unmixedness for m1 = m2 = q"},
      {"power-theorem", "capped Veronese GMP: L^k has linear quotients and a linear resolution"},
      {"reg-theorem", "capped Veronese GMP: reg(L^k) = kd"},
      {"decomposition-theorem", "transversal: L^k = intersection of (P'_h)^(k a_h), irredundant"},
      {"astab-theorem", "transversal: Ass(L^k) constant from k = 1"},
      {"bracket-theorem", "transversal: Ass(L^[k]) = Ass(L)"},
      {"analytic-theorem", "transversal: depth(T/L^k) constant, l(L) = total - depth(T/L)"},
      {"cm-check", "transversal: Cohen-Macaulay on the extremal shapes"},
  };
  return table;
}

Json primes_json(const std::vector<MonomialPrime>& primes) { return to_json(primes); }

struct Run {
  ScenarioReport report;

  void check(Json point, bool ok, Json witness) {
    report.grid.push_back(point);
    if (ok) {
      ++report.passes;
    } else {
      witness["at"] = std::move(point);
      report.failures.push_back(std::move(witness));
    }
  }
  void data(Json point, Json value) {
    value["at"] = std::move(point);
    report.data.push_back(std::move(value));
  }
};

Json capped_point(const CappedParams& c) { return Json{{"m1", c.m1}, {"m2", c.m2}, {"d", c.d}}; }

// Primes P_F with 1 <= |F| <= 2 over all variables of the ring.
std::vector<MonomialPrime> primes_up_to_two(const RingPtr& ring) {
  std::vector<MonomialPrime> out;
  const std::size_t n = ring->total_vars();
  for (std::size_t a = 0; a < n; ++a) {
    out.emplace_back(ring, std::vector<std::size_t>{a});
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(ring, std::vector<std::size_t>{a, b});
  }
  canonicalize(out);
  return out;
}

std::vector<CappedParams> capped_targets(const std::optional<Instance>& target, const std::string& scenario,
                                         const std::vector<CappedParams>& defaults) {
  if (!target) return defaults;
  if (!target->capped) throw InvalidArgument(scenario + " needs a capped_veronese_gmp(m1,m2,d) instance");
  return {*target->capped};
}

std::vector<TransversalSpec> transversal_targets(const std::optional<Instance>& target,
                                                 const std::string& scenario) {
  if (!target) return shipped_transversal_specs();
  if (!target->transversal) throw InvalidArgument(scenario + " needs a transversal(...) instance");
  return {*target->transversal};
}

std::vector<unsigned> powers(const CommandOptions& options, unsigned default_max) {
  if (options.k) {
    if (*options.k == 0) throw InvalidArgument("--k must be positive");
    return {*options.k};
  }
  std::vector<unsigned> ks;
  for (unsigned k = 1; k <= default_max; ++k) ks.push_back(k);
  return ks;
}

void ass_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions&) {
  const auto points = capped_targets(target, "ass-theorem", {{2, 2, 7}, {2, 3, 9}, {3, 3, 11}});
  for (const CappedParams& c : points) {
    const MonomialIdeal l = capped_veronese_gmp(c.m1, c.m2, c.d);
    const auto ass = associated_primes(l);
    const auto oracle = ass_oracle(l);
    if (c.d != 2 * c.m1 + 2 * c.m2 - 1) {
      run.data(capped_point(c), Json{{"ass", primes_json(ass)}});
      continue;
    }
    const auto expected = primes_up_to_two(l.ring());
    Json witness;
    for (const auto& p : ass) {
      if (p.size() > 2) witness["unexpected"].push_back(to_json(p));
    }
    for (const auto& p : expected) {
      if (!std::binary_search(ass.begin(), ass.end(), p)) witness["missing"].push_back(to_json(p));
    }
    if (oracle != ass) witness["oracle"] = primes_json(oracle);
    run.check(capped_point(c), ass == expected && oracle == ass, witness);
  }
}

std::vector<CappedParams> square_grid(bool slow) {
  std::vector<CappedParams> out;
  for (unsigned q : {2u, 3u}) {
    for (unsigned d = 2; d <= 4 * q - 1; ++d) out.push_back({q, q, d});
  }
  if (slow) out.push_back({4, 4, 15});
  return out;
}

void dim_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions&) {
  for (const CappedParams& c : capped_targets(target, "dim-theorem", square_grid(false))) {
    const MonomialIdeal l = capped_veronese_gmp(c.m1, c.m2, c.d);
    const std::size_t dim = dim_quotient(l);
    std::optional<std::size_t> expected;
    if (c.m1 == c.m2 && c.d >= 2 && c.d <= 2 * c.m1 + 2) expected = c.m1;
    if (c.m1 == c.m2 && c.d == 2 * (c.m1 + c.m2) - 1) expected = c.m1 + c.m2 - 1;
    if (!expected) {
      run.data(capped_point(c), Json{{"dim", dim}});
      continue;
    }
    run.check(capped_point(c), dim == *expected, Json{{"dim", dim}, {"expected", *expected}});
  }
}

void unmixed_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions& options) {
  std::vector<CappedParams> grid = square_grid(options.slow);
  for (const CappedParams& c : capped_targets(target, "unmixed-theorem", grid)) {
    const MonomialIdeal l = capped_veronese_gmp(c.m1, c.m2, c.d);
    const bool unmixed = is_unmixed(l);
    const std::size_t h = height(l);
    const unsigned top = 2 * (c.m1 + c.m2) - 1;
    const bool covered = c.m1 == c.m2 && ((c.m1 >= 3 && c.d == top) || (c.m1 == 2 && c.d >= 2 && c.d <= top));
    Json value{{"unmixed", unmixed}, {"height", h}};
    if (!covered) {
      run.data(capped_point(c), value);
      continue;
    }
    // At the top degree every variable is an associated prime, so height 1.
    const bool ok = unmixed && (c.d != top || h == 1);
    run.check(capped_point(c), ok, value);
  }
}

std::vector<CappedParams> power_grid() {
  std::vector<CappedParams> out;
  for (unsigned m1 : {2u, 3u}) {
    for (unsigned m2 : {2u, 3u}) {
      for (unsigned d = 2; d <= 2 * m1 + 2 * m2 - 1; ++d) out.push_back({m1, m2, d});
    }
  }
  return out;
}

void power_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions& options) {
  for (const CappedParams& c : capped_targets(target, "power-theorem", power_grid())) {
    const MonomialIdeal l = capped_veronese_gmp(c.m1, c.m2, c.d);
    for (unsigned k : powers(options, 2)) {
      const MonomialIdeal lk = power(l, k);
      const bool lex_desc = has_linear_quotients(lk, QuotientOrder::lex_descending);
      const bool lex_asc = has_linear_quotients(lk, QuotientOrder::lex_ascending);
      const LinearityReport lin = linear_resolution_report(lk, options.field);
      Json point = capped_point(c);
      point["k"] = k;
      Json witness{{"linear_quotients_lex_descending", lex_desc},
                   {"linear_quotients_lex_ascending", lex_asc},
                   {"linear_resolution", lin.linear}};
      if (!lin.reason.empty()) witness["reason"] = lin.reason;
      bool identity = true;
      if (k >= 2) {
        identity = gmp_power_identity(capped_veronese_gmp_spec(c.m1, c.m2, c.d), k, false).holds;
        witness["power_identity"] = identity;
      }
      run.check(point, lex_desc && lex_asc && lin.linear && identity, witness);
    }
  }
}

void reg_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions& options) {
  for (const CappedParams& c : capped_targets(target, "reg-theorem", power_grid())) {
    const MonomialIdeal l = capped_veronese_gmp(c.m1, c.m2, c.d);
    for (unsigned k : powers(options, 2)) {
      const int reg = regularity(power(l, k), options.field);
      Json point = capped_point(c);
      point["k"] = k;
      run.check(point, reg == static_cast<int>(k * c.d), Json{{"reg", reg}, {"expected", k * c.d}});
    }
  }
}

Json spec_point(const TransversalSpec& spec) { return Json{{"spec", describe(spec)}}; }

void decomposition_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions& options) {
  for (const TransversalSpec& spec : transversal_targets(target, "decomposition-theorem")) {
    const MonomialIdeal l = transversal_build(spec);
    for (unsigned k : powers(options, 3)) {
      const MonomialIdeal lk = power(l, k);
      const TransversalDecomposition dec = transversal_power_decomposition(spec, k);
      std::vector<MonomialIdeal> parts;
      std::vector<MonomialPrime> radicals;
      for (const auto& c : dec.components) {
        parts.push_back(c.ideal);
        radicals.push_back(c.radical);
      }
      const bool equal = intersection_equals(lk, parts);
      Json witness{{"intersection_equal", equal}};
      bool irredundant = true;
      for (std::size_t i = 0; i < parts.size() && equal; ++i) {
        std::vector<MonomialIdeal> rest;
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (j != i) rest.push_back(parts[j]);
        }
        if (!rest.empty() && intersection_equals(lk, rest)) {
          irredundant = false;
          witness["redundant"] = to_json(dec.components[i]);
        }
      }
      canonicalize(radicals);
      const auto ass = associated_primes(lk);
      const bool radicals_ok = radicals == ass;
      if (!radicals_ok) {
        witness["radicals"] = primes_json(radicals);
        witness["ass"] = primes_json(ass);
      }
      Json point = spec_point(spec);
      point["k"] = k;
      run.check(point, equal && irredundant && radicals_ok, witness);
    }
  }
}

void astab_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions& options) {
  const unsigned k_max = options.k_max.value_or(4);
  for (const TransversalSpec& spec : transversal_targets(target, "astab-theorem")) {
    const AssStability s = astab(transversal_build(spec), k_max, Provenance::transversal);
    const auto expected = transversal_ass(spec);
    bool same = true;
    for (const auto& a : s.per_power) same = same && a == expected;
    Json point = spec_point(spec);
    point["k_max"] = k_max;
    Json witness{{"index", s.index}, {"expected", primes_json(expected)}};
    if (!same) {
      Json per = Json::array();
      for (const auto& a : s.per_power) per.push_back(primes_json(a));
      witness["per_power"] = per;
    }
    run.check(point, s.index == 1 && same, witness);
  }
}

void bracket_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions& options) {
  for (const TransversalSpec& spec : transversal_targets(target, "bracket-theorem")) {
    for (unsigned k : powers(options, 3)) {
      const BracketAss b = bracket_ass_transversal(spec, k);
      Json point = spec_point(spec);
      point["k"] = k;
      run.check(point, b.matches,
                Json{{"bracket_ass", primes_json(b.primes)}, {"ass", primes_json(transversal_ass(spec))}});
    }
  }
}

// Rank of the generator exponent matrix: the Krull dimension of the toric
// ring K[G(L)] for an equigenerated L, computed without depth.
std::size_t fiber_dimension(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring()->total_vars();
  IntMatrix m(ideal.size(), n);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const Exponent* row = ideal.row(i);
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = row[j];
  }
  return rank(m, Field::rationals());
}

void analytic_theorem(Run& run, const std::optional<Instance>& target, const CommandOptions& options) {
  const unsigned k_max = options.k_max.value_or(3);
  for (const TransversalSpec& spec : transversal_targets(target, "analytic-theorem")) {
    const MonomialIdeal l = transversal_build(spec);
    const DepthStability s = dstab(l, k_max, Provenance::transversal, options.field);
    const std::size_t ell = analytic_spread_transversal(l, Provenance::transversal, options.field);
    const std::size_t fiber = fiber_dimension(l);
    const bool constant =
        std::all_of(s.per_power.begin(), s.per_power.end(), [&](std::size_t d) { return d == s.per_power.front(); });
    Json point = spec_point(spec);
    point["k_max"] = k_max;
    run.check(point, constant && ell == fiber,
              Json{{"depths", s.per_power}, {"analytic_spread", ell}, {"fiber_dimension", fiber}});
  }
}

void cm_check(Run& run, const std::optional<Instance>& target, const CommandOptions&) {
  for (const TransversalSpec& spec : transversal_targets(target, "cm-check")) {
    if (!covers_ground_set(spec)) {
      run.data(spec_point(spec), Json{{"skipped", "subsets do not cover [n]"}});
      continue;
    }
    const CmReport r = cm_check_transversal(spec);
    Json value{{"cohen_macaulay", r.is_cm}, {"dim", r.dim}, {"depth", r.depth}};
    if (!r.extremal) {
      run.data(spec_point(spec), value);
      continue;
    }
    run.check(spec_point(spec), r.is_cm, value);
  }
}

using ScenarioFn = std::function<void(Run&, const std::optional<Instance>&, const CommandOptions&)>;

const std::map<std::string, ScenarioFn>& scenario_functions() {
  static const std::map<std::string, ScenarioFn> fns = {
      {"ass-theorem", ass_theorem},
      {"dim-theorem", dim_theorem},
      {"unmixed-theorem", unmixed_theorem},
      {"power-theorem", power_theorem},
      {"reg-theorem", reg_theorem},
      {"decomposition-theorem", decomposition_theorem},
      {"astab-theorem", astab_theorem},
      {"bracket-theorem", bracket_theorem},
      {"analytic-theorem", analytic_theorem},
      {"cm-check", cm_check},
  };
  return fns;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : scenario_table()) out.push_back(name);
    return out;
  }();
  return names;
}

ScenarioReport run_scenario(const std::string& name, const std::optional<Instance>& target,
                            const CommandOptions& options) {
  const auto& fns = scenario_functions();
  const auto it = fns.find(name);
  if (it == fns.end()) throw InvalidArgument("unknown scenario '" + name + "'");
  Run run;
  run.report.scenario = name;
  it->second(run, target, options);
  return std::move(run.report);
}

std::vector<TransversalSpec> shipped_transversal_specs() {
  using S = std::vector<std::vector<std::size_t>>;
  return {
      {5, S{{0, 1}, {0, 1, 2, 3}, {2, 4}, {3, 4}}, {}},
      {5, S{{0, 1}, {0, 1, 2, 3}, {2, 4}, {3, 4}}, {2, 1, 1, 1, 1}},
      {3, S{{0, 1}, {1, 2}}, {}},
      {3, S{{0, 1}, {1, 2}}, {2, 1, 2}},
      {4, S{{0, 1}, {2, 3}}, {}},
      {2, S{{0}, {0}, {1}}, {}},
      {3, S{{0, 1, 2}, {0, 1, 2}}, {}},
      {2, S{{0, 1}, {0, 1}}, {2, 2}},
      {4, S{{0, 1}, {1, 2}, {2, 3}}, {}},
      {3, S{{0, 1}, {1, 2}, {0, 2}}, {}},
      {3, S{{0}, {1, 2}, {2}}, {}},
      {4, S{{0, 1, 2}, {2, 3}}, {1, 1, 2, 1}},
  };
}

std::string describe(const TransversalSpec& spec) {
  std::string out = "transversal([";
  std::size_t largest = 0;
  for (std::size_t i = 0; i < spec.subsets.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < spec.subsets[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(spec.subsets[i][j] + 1);
      largest = std::max(largest, spec.subsets[i][j] + 1);
    }
    out += "]";
  }
  out += "]";
  std::vector<std::size_t> blocks = spec.blocks;
  if (blocks.empty() && largest != spec.n) blocks.assign(spec.n, 1);
  if (!blocks.empty()) {
    out += ";";
    for (std::size_t i = 0; i < blocks.size(); ++i) out += (i ? "," : " ") + std::to_string(blocks[i]);
  }
  out += ")";
  return out;
}

}  // namespace monideal
