// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "monideal/commands.hpp"
#include "monideal/error.hpp"
#include "monideal/limits.hpp"

namespace {

// "QQ", "0" or "p=<prime>".
monideal::Field parse_field(const std::string& text) {
  if (text == "QQ" || text == "Q" || text == "0" || text == "rationals") return monideal::Field::rationals();
  std::string digits = text.rfind("p=", 0) == 0 ? text.substr(2) : text;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
    throw monideal::InvalidArgument("--field expects QQ or p=<prime>, got '" + text + "'");
  }
  return monideal::Field::prime(std::stoull(digits));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideals: decompositions, Betti numbers, and checks for GMP and transversal ideals"};
  app.set_version_flag("--version", "monideal 1.0.0");

  std::string verb;
  std::optional<std::string> target;
  std::optional<std::string> spec;
  std::optional<unsigned> k;
  std::optional<unsigned> k_max;
  std::string field = "QQ";
  std::string format = "text";
  bool strict = false;
  bool slow = false;
  std::optional<std::size_t> max_lattice;
  std::optional<std::size_t> max_witness_box;

  std::string verbs_help;
  for (const auto& v : monideal::command_verbs()) verbs_help += (verbs_help.empty() ? "" : " | ") + v;
  std::string scenarios_help;
  for (const auto& s : monideal::scenario_names()) scenarios_help += (scenarios_help.empty() ? "" : ", ") + s;

  app.add_option("verb", verb, verbs_help)->required()->check(CLI::IsMember(monideal::command_verbs()));
  app.add_option("target", target,
                 "Ideal expression or JSON spec file; a scenario name for verify (" + scenarios_help +
                     "). Read from stdin when omitted.");
  app.add_option("--spec", spec, "Construction spec: JSON file or expression");
  app.add_option("--k", k, "Power of the target (bracket exponent for bracket, default 2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--k-max", k_max, "Largest power for astab / dstab")->check(CLI::PositiveNumber);
  app.add_option("--field", field, "QQ (default) or p=<prime>, e.g. p=65537");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", strict, "Reject GMP families violating the inclusion or product condition");
  app.add_flag("--slow", slow, "Include the expensive grid points of verify scenarios");
  app.add_option("--max-lattice", max_lattice, "Cap on lcm-lattice points")->check(CLI::PositiveNumber);
  app.add_option("--max-witness-box", max_witness_box, "Cap on the Ass oracle's witness box")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? monideal::exit_ok : monideal::exit_usage;
  }

  monideal::CommandOptions options;
  options.k = k;
  options.k_max = k_max;
  options.format = format == "json" ? monideal::Format::json : monideal::Format::text;
  options.strict = strict;
  options.slow = slow;
  try {
    options.field = parse_field(field);
  } catch (const monideal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return monideal::exit_usage;
  }
  if (max_lattice) monideal::limits().max_lattice = *max_lattice;
  if (max_witness_box) monideal::limits().max_witness_box = *max_witness_box;

  if (!target && !(verb == "verify") && !spec) {
    std::string input(std::istreambuf_iterator<char>(std::cin), {});
    target = std::move(input);
  }

  const monideal::CommandResult result = monideal::run_command(verb, target, spec, options);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
