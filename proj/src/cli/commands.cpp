// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/expression.hpp"
#include "monideal/resolution.hpp"

namespace monideal {

const std::vector<std::string>& command_verbs() {
  static const std::vector<std::string> verbs = {
      "ass",     "mindec", "primdec", "betti", "reg",  "depth",   "dim",    "height", "unmixed",
      "linres",  "linquot", "astab",  "dstab", "ell",  "bracket", "verify", "eval",
  };
  return verbs;
}

Instance load_target(const std::string& target) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(target, ec)) {
    std::ifstream in(target);
    if (!in) throw InvalidArgument("cannot read " + target);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(target + ": " + e.what());
    }
    return instance_from_json(j);
  }
  return evaluate(target);
}

namespace {

Instance apply_power(const Instance& inst, unsigned k) {
  if (k == 1) return inst;
  if (inst.transversal && k >= 1) return make_instance(power(*inst.transversal, k));
  return Instance{power(inst.ideal, k), Provenance::generic, std::nullopt, std::nullopt, std::nullopt};
}

void enforce_strict(const Instance& inst) {
  if (!inst.gmp) return;
  const GmpReport report = gmp_validate(*inst.gmp);
  if (!report.inclusion.empty()) {
    const auto& v = report.inclusion.front();
    throw InclusionViolation("L_{" + std::to_string(v.block + 1) + "," + std::to_string(v.larger) +
                             "} is not contained in L_{" + std::to_string(v.block + 1) + "," +
                             std::to_string(v.smaller) + "}");
  }
  if (!report.product.empty()) {
    const auto& v = report.product.front();
    auto name = [&](unsigned e) { return "L_{" + std::to_string(v.block + 1) + "," + std::to_string(e) + "}"; };
    throw Condition5Violation(name(v.a) + name(v.b) + " is not contained in " + name(v.c) + name(v.d));
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string multidegree_text(const RingPtr& ring, const Multidegree& a) {
  std::vector<unsigned> exps(a.begin(), a.end());
  return Monomial(ring, exps).to_string();
}

struct Output {
  Json json;
  std::string text;
  int exit_code = exit_ok;
};

Output run_verb(const std::string& verb, const Instance& target, const CommandOptions& options) {
  Output o;
  const Field field = options.field;
  const bool uses_power = verb != "bracket" && verb != "astab" && verb != "dstab" && verb != "ell";
  const unsigned k = options.k.value_or(verb == "bracket" ? 2 : 1);
  const Instance inst = uses_power ? apply_power(target, k) : target;
  const MonomialIdeal& ideal = inst.ideal;
  std::ostringstream text;
  o.json["input"] = print(ideal);
  if (uses_power && k != 1) o.json["k"] = k;

  if (verb == "eval") {
    o.json["provenance"] = to_string(inst.provenance);
    o.json["generators"] = ideal.size();
    o.json["ideal"] = to_json(ideal);
    text << print(ideal) << "\n";
  } else if (verb == "ass") {
    const auto primes = associated_primes(ideal);
    o.json["primes"] = to_json(primes);
    for (const auto& p : primes) text << p.to_string() << "\n";
  } else if (verb == "mindec") {
    Json comps = Json::array();
    for (const auto& c : irreducible_decomposition(ideal)) {
      comps.push_back(to_json(c));
      text << c.to_string() << "\n";
    }
    o.json["components"] = comps;
  } else if (verb == "primdec") {
    Json comps = Json::array();
    for (const auto& c : primary_decomposition(ideal)) {
      comps.push_back(to_json(c));
      text << c.radical.to_string() << ": " << c.ideal.to_string() << "\n";
    }
    o.json["components"] = comps;
  } else if (verb == "betti") {
    const BettiTable table = betti_table(ideal, field);
    o.json["field"] = field.to_string();
    o.json["entries"] = to_json(table);
    Json graded = Json::array();
    for (const auto& [ij, rank] : table.graded()) {
      graded.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"rank", rank}});
      text << "beta_" << ij.first << "," << ij.second << " = " << rank << "\n";
    }
    o.json["graded"] = graded;
    for (const auto& e : table.entries()) {
      text << "  beta_" << e.i << "(" << multidegree_text(ideal.ring(), e.multidegree) << ") = " << e.rank << "\n";
    }
  } else if (verb == "reg") {
    const int reg = regularity(ideal, field);
    o.json["regularity"] = reg;
    text << reg << "\n";
  } else if (verb == "depth") {
    const std::size_t depth = depth_quotient(ideal, field);
    o.json["depth"] = depth;
    text << depth << "\n";
  } else if (verb == "dim") {
    const std::size_t dim = dim_quotient(ideal);
    o.json["dim"] = dim;
    text << dim << "\n";
  } else if (verb == "height") {
    const std::size_t h = height(ideal);
    o.json["height"] = h;
    text << h << "\n";
  } else if (verb == "unmixed") {
    const bool u = is_unmixed(ideal);
    o.json["unmixed"] = u;
    text << bool_text(u) << "\n";
  } else if (verb == "linres") {
    const LinearityReport r = linear_resolution_report(ideal, field);
    o.json["linear"] = r.linear;
    if (r.degree) o.json["degree"] = *r.degree;
    if (!r.reason.empty()) o.json["reason"] = r.reason;
    text << bool_text(r.linear) << (r.reason.empty() ? "" : " (" + r.reason + ")") << "\n";
  } else if (verb == "linquot") {
    const bool lq = has_linear_quotients(ideal);
    o.json["order"] = "lex_descending";
    o.json["linear_quotients"] = lq;
    text << bool_text(lq) << "\n";
  } else if (verb == "astab") {
    const AssStability s = astab(ideal, options.k_max.value_or(4), inst.provenance);
    o.json["index"] = s.index;
    o.json["k_max"] = s.k_max;
    o.json["proven"] = s.proven;
    o.json["stable_ass"] = to_json(s.stable_ass);
    Json per = Json::array();
    for (const auto& a : s.per_power) per.push_back(to_json(a));
    o.json["per_power"] = per;
    text << "astab = " << s.index << (s.proven ? "" : " (stable through k = " + std::to_string(s.k_max) + ")") << "\n";
    for (const auto& p : s.stable_ass) text << p.to_string() << "\n";
  } else if (verb == "dstab") {
    const DepthStability s = dstab(ideal, options.k_max.value_or(4), inst.provenance, field);
    o.json["index"] = s.index;
    o.json["k_max"] = s.k_max;
    o.json["limit_depth"] = s.limit_depth;
    o.json["proven"] = s.proven;
    o.json["per_power"] = s.per_power;
    text << "dstab = " << s.index << (s.proven ? "" : " (stable through k = " + std::to_string(s.k_max) + ")")
         << "\nlimit depth = " << s.limit_depth << "\n";
  } else if (verb == "ell") {
    const std::size_t ell = analytic_spread_transversal(ideal, inst.provenance, field);
    o.json["analytic_spread"] = ell;
    text << ell << "\n";
  } else if (verb == "bracket") {
    const MonomialIdeal b = bracket_power(ideal, k);
    o.json["k"] = k;
    o.json["ideal"] = print(b);
    text << print(b) << "\n";
  } else {
    throw InvalidArgument("unknown command '" + verb + "'");
  }
  o.text = text.str();
  return o;
}

std::string scenario_text(const ScenarioReport& r) {
  std::ostringstream text;
  text << r.scenario << ": " << r.passes << " passed, " << r.failures.size() << " failed\n";
  for (const auto& f : r.failures) text << "  FAIL " << f.dump() << "\n";
  for (const auto& d : r.data) text << "  data " << d.dump() << "\n";
  return text.str();
}

}  // namespace

CommandResult run_command(const std::string& verb, const std::optional<std::string>& target,
                          const std::optional<std::string>& spec, const CommandOptions& options) {
  CommandResult result;
  auto fail = [&](int code, const std::string& message) {
    result.exit_code = code;
    result.err = "error: " + message + "\n";
    if (options.format == Format::json) {
      result.out = Json{{"schema", 1}, {"command", verb}, {"error", message}, {"exit_code", code}}.dump(2) + "\n";
    }
  };
  try {
    Json out{{"schema", 1}, {"command", verb}};
    std::string text;
    if (verb == "verify") {
      if (!target) throw InvalidArgument("verify needs a scenario name");
      std::optional<Instance> inst;
      if (spec) inst = load_target(*spec);
      if (inst && options.strict) enforce_strict(*inst);
      const ScenarioReport r = run_scenario(*target, inst, options);
      out["scenario"] = r.scenario;
      out["grid"] = r.grid;
      out["passes"] = r.passes;
      out["failures"] = r.failures;
      if (!r.data.empty()) out["data"] = r.data;
      text = scenario_text(r);
      result.exit_code = r.failures.empty() ? exit_ok : exit_check_failed;
    } else {
      if (std::find(command_verbs().begin(), command_verbs().end(), verb) == command_verbs().end()) {
        throw InvalidArgument("unknown command '" + verb + "'");
      }
      const std::optional<std::string>& source = spec ? spec : target;
      if (!source) throw InvalidArgument(verb + " needs an expression or --spec");
      const Instance inst = load_target(*source);
      if (options.strict) enforce_strict(inst);
      Output o = run_verb(verb, inst, options);
      out.update(o.json);
      text = std::move(o.text);
      result.exit_code = o.exit_code;
    }
    result.out = options.format == Format::json ? out.dump(2) + "\n" : text;
  } catch (const ResourceLimit& e) {
    fail(exit_resource, e.what());
  } catch (const Error& e) {
    fail(exit_usage, std::string(to_string(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    fail(exit_resource, "out of memory");
  }
  return result;
}

}  // namespace monideal
