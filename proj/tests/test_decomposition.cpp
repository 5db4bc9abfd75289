// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <doctest.h>

#include "monideal/constructions.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "support.hpp"

using namespace monideal;
using test::ideal_of;
using test::prime_names;

namespace {

std::vector<MonomialIdeal> component_ideals(const std::vector<IrreducibleComponent>& comps) {
  std::vector<MonomialIdeal> out;
  for (const auto& c : comps) out.push_back(c.ideal());
  return out;
}

std::vector<std::string> component_names(const std::vector<IrreducibleComponent>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) out.push_back(c.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("irreducible decomposition of the two-generator example") {
  const MonomialIdeal i = ideal_of("ideal(x1*x2^2, x1^2*x2)");
  const auto comps = irreducible_decomposition(i);
  CHECK(component_names(comps) == std::vector<std::string>{"(x1)", "(x1^2, x2^2)", "(x2)"});
  CHECK(component_names(irreducible_decomposition_by_splitting(i)) == component_names(comps));
  CHECK(intersect_all(component_ideals(comps)) == i);
}

TEST_CASE("irreducible decomposition of small ideals") {
  CHECK(component_names(irreducible_decomposition(ideal_of("prime(x1,x2)"))) ==
        std::vector<std::string>{"(x1, x2)"});
  const MonomialIdeal tri = ideal_of("ideal(x1*x2, x2*x3, x1*x3)");
  const auto comps = irreducible_decomposition(tri);
  CHECK(component_names(comps) == std::vector<std::string>{"(x1, x2)", "(x1, x3)", "(x2, x3)"});
  CHECK(intersect_all(component_ideals(comps)) == tri);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(tri.ring())), ZeroOrUnitIdeal);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(tri.ring())), ZeroOrUnitIdeal);
}

TEST_CASE("irreducible component containment") {
  const RingPtr r = BlockedRing::plain(2);
  const IrreducibleComponent big{r, {1, 0}};
  const IrreducibleComponent small{r, {2, 2}};
  // (x1^2, x2^2) is not inside (x1); (x1^2) is.
  CHECK_FALSE(big.contains(small));
  CHECK(big.contains(IrreducibleComponent{r, {2, 0}}));
  CHECK(small.radical().to_string() == "(x1, x2)");
}

TEST_CASE("associated primes of the four-variable top-degree example") {
  const MonomialIdeal l = capped_veronese_gmp(2, 2, 7);
  const std::vector<std::string> expected = {
      "(x11)",      "(x12)",      "(x21)",      "(x22)",      "(x11, x12)",
      "(x11, x21)", "(x11, x22)", "(x12, x21)", "(x12, x22)", "(x21, x22)",
  };
  CHECK(prime_names(associated_primes(l)) == expected);
  CHECK(prime_names(ass_oracle(l)) == expected);
}

TEST_CASE("associated primes of small ideals") {
  CHECK(prime_names(associated_primes(ideal_of("ideal(x1^3)"))) == std::vector<std::string>{"(x1)"});
  const MonomialIdeal pq = ideal_of("prime(x1,x2)*prime(x2,x3)");
  CHECK(prime_names(associated_primes(pq)) ==
        std::vector<std::string>{"(x1, x2)", "(x2, x3)", "(x1, x2, x3)"});
  CHECK(ass_oracle(pq) == associated_primes(pq));
}

TEST_CASE("oracle witnesses") {
  const auto w = ass_oracle_witnesses(ideal_of("ideal(x1)"));
  REQUIRE(w.size() == 1);
  CHECK(w[0].witness.is_one());
  CHECK(w[0].prime.to_string() == "(x1)");

  // A lowest-degree witness for (x11, x12) has degree d - 1 = 6.
  const MonomialIdeal l = capped_veronese_gmp(2, 2, 7);
  bool found = false;
  for (const auto& a : ass_oracle_witnesses(l)) {
    if (a.prime.to_string() == "(x11, x12)") {
      found = true;
      CHECK(colon(l, a.witness) == a.prime.ideal());
      CHECK(a.witness.degree() == 6);
    }
  }
  CHECK(found);
}

TEST_CASE("oracle respects the witness box cap") {
  const MonomialIdeal big = ideal_of("ideal(x1^40*x2^40*x3^40*x4^40*x5^40)");
  CHECK_THROWS_AS(ass_oracle(big), ResourceLimit);
}

TEST_CASE("primary decomposition") {
  const MonomialIdeal i = ideal_of("ideal(x1*x2^2, x1^2*x2)");
  const auto pd = primary_decomposition(i);
  std::vector<std::string> names;
  for (const auto& c : pd) names.push_back(c.ideal.to_string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"(x1)", "(x1^2, x2^2)", "(x2)"});

  const MonomialIdeal cube = ideal_of("prime(x1,x2)^3");
  const auto pc = primary_decomposition(cube);
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].ideal == cube);

  const MonomialIdeal sq = ideal_of("(prime(x1,x2)*prime(x2,x3))^2");
  const auto ps = primary_decomposition(sq);
  std::vector<MonomialIdeal> parts;
  std::vector<MonomialPrime> radicals;
  for (const auto& c : ps) {
    parts.push_back(c.ideal);
    radicals.push_back(c.radical);
    CHECK(associated_primes(c.ideal) == std::vector<MonomialPrime>{c.radical});
  }
  CHECK(intersect_all(parts) == sq);
  CHECK(radicals == associated_primes(sq));
  CHECK(ps[0].ideal == ideal_of("ring(1,1,1); prime(x1,x2)^2"));
}

TEST_CASE("intersection_equals matches explicit intersection") {
  const MonomialIdeal i = ideal_of("ideal(x1*x2^2, x1^2*x2)");
  const std::vector<MonomialIdeal> good = {ideal_of("ring(1,1); ideal(x1)"), ideal_of("ideal(x1^2, x2^2)"),
                                           ideal_of("ring(1,1); ideal(x2)")};
  CHECK(intersection_equals(i, good));
  const std::vector<MonomialIdeal> missing = {good[0], good[2]};
  CHECK_FALSE(intersection_equals(i, missing));
}

TEST_CASE("vertex covers, height, dimension, unmixedness") {
  const MonomialIdeal l = capped_veronese_gmp(2, 2, 3);
  CHECK(minimal_vertex_covers(l) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK(height(l) == 2);
  CHECK(dim_quotient(l) == 2);
  CHECK(is_unmixed(l));
  CHECK(prime_names(minimal_primes(l)) == std::vector<std::string>{"(x11, x12)", "(x21, x22)"});

  const MonomialIdeal mixed = ideal_of("ideal(x1*x2, x1*x3, x1*x4)");
  CHECK(height(mixed) == 1);
  CHECK_FALSE(is_unmixed(mixed));
  CHECK(dim_quotient(mixed) == 3);
}

TEST_CASE("astab on a transversal product and on a generic ideal") {
  const Instance inst = evaluate("transversal([[1,2],[2,3]])");
  const AssStability s = astab(inst.ideal, 4, inst.provenance);
  CHECK(s.index == 1);
  CHECK(s.proven);
  CHECK(s.per_power.size() == 4);
  CHECK(prime_names(s.stable_ass) == std::vector<std::string>{"(x1, x2)", "(x2, x3)", "(x1, x2, x3)"});

  const MonomialIdeal triangle = ideal_of("ideal(x1*x2, x2*x3, x1*x3)");
  const AssStability g = astab(triangle, 3);
  CHECK_FALSE(g.proven);
  // (x1,x2,x3) is embedded from the second power on.
  CHECK(g.index == 2);
  CHECK(g.per_power[0].size() == 3);
  CHECK(g.per_power[1].size() == 4);
  CHECK(g.per_power[1] == ass_oracle(power(triangle, 2)));
}
