// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/serialize.hpp"

#include "monideal/error.hpp"

namespace monideal {

namespace {

// nlohmann throws its own exceptions on type errors; surface them as ours.
template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("spec is missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

RingPtr ring_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BlockedRing::plain(j.get<std::size_t>());
  if (j.contains("blocks")) return BlockedRing::make(get<std::vector<std::size_t>>(j, "blocks"));
  if (j.contains("n")) return BlockedRing::plain(get<std::size_t>(j, "n"));
  throw InvalidArgument("ring needs \"blocks\" or \"n\"");
}

GmpFamily family_from_json(const Json& j, const RingPtr& ring) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "veronese") return GmpFamily::veronese();
    if (name == "squarefree") return GmpFamily::squarefree();
    throw InvalidArgument("unknown family \"" + name + "\"");
  }
  const auto kind = get<std::string>(j, "kind");
  if (kind == "veronese") return GmpFamily::veronese();
  if (kind == "squarefree") return GmpFamily::squarefree();
  if (kind == "capped") return GmpFamily::capped(get<unsigned>(j, "cap"));
  if (kind != "explicit") throw InvalidArgument("unknown family kind \"" + kind + "\"");
  GmpFamily family = GmpFamily::explicit_entries();
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw InvalidArgument("explicit family needs an \"entries\" array");
  }
  for (const auto& e : j.at("entries")) {
    const auto block = get<std::size_t>(e, "block");
    if (block == 0) throw InvalidArgument("family blocks are 1-based");
    std::vector<Monomial> gens;
    for (const auto& row : get<std::vector<std::vector<unsigned>>>(e, "generators")) {
      gens.emplace_back(ring, row);
    }
    family.set(block - 1, get<unsigned>(e, "exponent"), MonomialIdeal(ring, gens));
  }
  return family;
}

}  // namespace

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  const std::size_t n = ideal.ring()->total_vars();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    gens.push_back(std::vector<unsigned>(ideal.row(i), ideal.row(i) + n));
  }
  return Json{{"ring", {{"blocks", ideal.ring()->block_sizes()}}}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.contains("ring")) throw InvalidArgument("ideal needs a \"ring\"");
  const RingPtr ring = ring_from_json(j.at("ring"));
  std::vector<Monomial> gens;
  for (const auto& row : get<std::vector<std::vector<unsigned>>>(j, "generators")) {
    gens.emplace_back(ring, row);
  }
  return MonomialIdeal(ring, gens);
}

Json to_json(const MonomialPrime& prime) { return prime.names(); }

Json to_json(const std::vector<MonomialPrime>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(to_json(p));
  return out;
}

Json to_json(const IrreducibleComponent& component) {
  Json out = Json::object();
  for (std::size_t v = 0; v < component.bounds.size(); ++v) {
    if (component.bounds[v] != 0) out[component.ring->variable_name(v)] = component.bounds[v];
  }
  return out;
}

Json to_json(const PrimaryComponent& component) {
  return Json{{"radical", to_json(component.radical)}, {"ideal", to_json(component.ideal)}};
}

Json to_json(const BettiTable& table) {
  Json out = Json::array();
  for (const auto& e : table.entries()) {
    out.push_back(Json{{"i", e.i},
                       {"multidegree", std::vector<unsigned>(e.multidegree.begin(), e.multidegree.end())},
                       {"total_degree", e.total_degree},
                       {"rank", e.rank}});
  }
  return out;
}

Json to_json(const TransversalSpec& spec) {
  Json subsets = Json::array();
  for (const auto& f : spec.subsets) {
    Json s = Json::array();
    for (std::size_t i : f) s.push_back(i + 1);
    subsets.push_back(s);
  }
  Json out{{"kind", "transversal"}, {"n", spec.n}, {"subsets", subsets}};
  if (!spec.blocks.empty()) out["blocks"] = spec.blocks;
  return out;
}

TransversalSpec transversal_from_json(const Json& j) {
  TransversalSpec spec;
  const auto subsets = get<std::vector<std::vector<std::size_t>>>(j, "subsets");
  std::size_t largest = 0;
  for (const auto& f : subsets) {
    std::vector<std::size_t> zero_based;
    for (std::size_t i : f) {
      if (i == 0) throw InvalidArgument("transversal subsets are 1-based");
      zero_based.push_back(i - 1);
      largest = std::max(largest, i);
    }
    spec.subsets.push_back(std::move(zero_based));
  }
  if (j.contains("blocks")) spec.blocks = get<std::vector<std::size_t>>(j, "blocks");
  spec.n = j.contains("n") ? get<std::size_t>(j, "n") : (spec.blocks.empty() ? largest : spec.blocks.size());
  validate(spec);
  return spec;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("spec must be a JSON object");
  const auto kind = get<std::string>(j, "kind");
  if (kind == "veronese") {
    VeroneseSpec spec{get<std::vector<unsigned>>(j, "caps"), get<unsigned>(j, "degree")};
    return Instance{veronese_type(spec), Provenance::veronese, std::nullopt, std::nullopt, std::nullopt};
  }
  if (kind == "capped_veronese_gmp") {
    return make_instance(CappedParams{get<unsigned>(j, "m1"), get<unsigned>(j, "m2"), get<unsigned>(j, "d")});
  }
  if (kind == "transversal") return make_instance(transversal_from_json(j));
  if (kind == "gmp") {
    if (!j.contains("base")) throw InvalidArgument("gmp spec needs a \"base\" ideal");
    const MonomialIdeal base = ideal_from_json(j.at("base"));
    auto blocks = get<std::vector<std::size_t>>(j, "blocks");
    if (blocks.size() != base.ring()->total_vars()) {
      throw InvalidArgument("need one block size per variable of the base ideal");
    }
    const RingPtr ring = BlockedRing::make(blocks);
    if (!j.contains("family")) throw InvalidArgument("gmp spec needs a \"family\"");
    GmpSpec spec{base, std::move(blocks), family_from_json(j.at("family"), ring)};
    const bool strict = j.contains("strict") && j.at("strict").get<bool>();
    MonomialIdeal ideal = gmp_build(spec, strict);
    return Instance{std::move(ideal), Provenance::gmp, std::nullopt, std::nullopt, std::move(spec)};
  }
  if (kind == "ideal") return Instance{ideal_from_json(j), Provenance::generic, std::nullopt, std::nullopt, std::nullopt};
  throw InvalidArgument("unknown spec kind \"" + kind + "\"");
}

}  // namespace monideal
