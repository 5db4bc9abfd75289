// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <json.hpp>

#include "monideal/constructions.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/resolution.hpp"

namespace monideal {

using Json = nlohmann::ordered_json;

// {"ring": {"blocks": [...]}, "generators": [[exponents...], ...]}
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

// Sorted variable names.
Json to_json(const MonomialPrime& prime);
Json to_json(const std::vector<MonomialPrime>& primes);
// Variable name -> bound.
Json to_json(const IrreducibleComponent& component);
Json to_json(const PrimaryComponent& component);
// [{i, multidegree, total_degree, rank}, ...]
Json to_json(const BettiTable& table);

// Subsets are 1-based in JSON.
Json to_json(const TransversalSpec& spec);
TransversalSpec transversal_from_json(const Json& j);

// A construction spec file: {"kind": "veronese" | "capped_veronese_gmp" |
// "gmp" | "transversal" | "ideal", ...}. Throws InvalidArgument.
Instance instance_from_json(const Json& j);

}  // namespace monideal
