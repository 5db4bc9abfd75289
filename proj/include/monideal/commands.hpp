// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monideal/constructions.hpp"
#include "monideal/linalg.hpp"
#include "monideal/serialize.hpp"

namespace monideal {

enum class Format { text, json };

struct CommandOptions {
  // Power applied to the target (bracket exponent for `bracket`).
  std::optional<unsigned> k;
  std::optional<unsigned> k_max;
  Field field = Field::rationals();
  Format format = Format::text;
  // Enforce the GMP inclusion and product conditions.
  bool strict = false;
  // Include the expensive grid points of `verify` scenarios.
  bool slow = false;
};

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_resource = 3,
};

struct CommandResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

const std::vector<std::string>& command_verbs();
const std::vector<std::string>& scenario_names();

// `target` is a JSON spec file path or an expression.
Instance load_target(const std::string& target);

// Runs one verb; `target` is the scenario name for `verify` plus an optional
// instance in `spec`. Never throws: errors become exit codes and messages.
CommandResult run_command(const std::string& verb, const std::optional<std::string>& target,
                          const std::optional<std::string>& spec, const CommandOptions& options);

struct ScenarioReport {
  std::string scenario;
  Json grid = Json::array();
  std::size_t passes = 0;
  Json failures = Json::array();
  // Grid points outside the theorem's hypotheses, reported as-is.
  Json data = Json::array();
};

// Throws InvalidArgument for unknown names or instances the scenario
// cannot take.
ScenarioReport run_scenario(const std::string& name, const std::optional<Instance>& target,
                            const CommandOptions& options);

// Transversal specs the scenarios run by default.
std::vector<TransversalSpec> shipped_transversal_specs();

// Expression text for a transversal spec, e.g. "transversal([[1,2],[2,3]]; 2,1,1)".
std::string describe(const TransversalSpec& spec);

}  // namespace monideal
