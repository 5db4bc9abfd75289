// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <doctest.h>

#include "monideal/error.hpp"
#include "monideal/membership.hpp"
#include "support.hpp"

using namespace monideal;
using test::Exps;
using test::exponent_rows;
using test::ideal_of;

TEST_CASE("blocked ring variable names") {
  const RingPtr r = BlockedRing::make({2, 3});
  CHECK(r->total_vars() == 5);
  CHECK_FALSE(r->is_plain());
  CHECK(r->variable_name(0) == "x11");
  CHECK(r->variable_name(4) == "x23");
  CHECK(r->block_of(3) == 1);
  CHECK(r->variable(1, 2) == 4);
  CHECK(r->parse_variable("x22") == std::optional<std::size_t>(3));
  CHECK(r->parse_variable("x2_2") == std::optional<std::size_t>(3));
  CHECK_FALSE(r->parse_variable("x31").has_value());

  const RingPtr p = BlockedRing::plain(3);
  CHECK(p->is_plain());
  CHECK(p->variable_name(2) == "x3");
}

TEST_CASE("blocks with ten or more variables use the underscore form only on collision") {
  const RingPtr r = BlockedRing::make({12, 2});
  CHECK(r->parse_variable(r->variable_name(11)) == std::optional<std::size_t>(11));
  CHECK(r->parse_variable(r->variable_name(12)) == std::optional<std::size_t>(12));
  CHECK(r->variable_name(11) != r->variable_name(12));
}

TEST_CASE("monomial arithmetic") {
  const RingPtr r = BlockedRing::plain(3);
  const Monomial a(r, {1, 2, 0});
  const Monomial b(r, {2, 1, 1});
  CHECK((a * b) == Monomial(r, {3, 3, 1}));
  CHECK(lcm(a, b) == Monomial(r, {2, 2, 1}));
  CHECK(gcd(a, b) == Monomial(r, {1, 1, 0}));
  CHECK(quotient(a, b) == Monomial(r, {0, 1, 0}));
  CHECK(pow(a, 3) == Monomial(r, {3, 6, 0}));
  CHECK(a.degree() == 3);
  CHECK(Monomial(r, {1, 1, 0}).divides(b));
  CHECK(a.to_string() == "x1*x2^2");
  CHECK(Monomial(r).to_string() == "1");
  CHECK_THROWS_AS(Monomial(r, {1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Monomial(r, {70000, 0, 0}), ResourceLimit);
}

TEST_CASE("minimalize") {
  const RingPtr r = BlockedRing::plain(2);
  CHECK(MonomialIdeal(r, {Monomial(r, {1, 0}), Monomial(r, {1, 1})}) == ideal_of("ring(1,1); ideal(x1)"));
  const MonomialIdeal i(r, {Monomial(r, {1, 2}), Monomial(r, {2, 1})});
  CHECK(i.size() == 2);
  CHECK(exponent_rows(i) == std::vector<Exps>{{1, 2}, {2, 1}});
  CHECK(MonomialIdeal(r, std::vector<Monomial>{}).is_zero());
  // Canonical order is lex descending.
  CHECK(i.generator(0) == Monomial(r, {2, 1}));
  const RingPtr other = BlockedRing::plain(3);
  CHECK_THROWS_AS(MonomialIdeal(r, {Monomial(other, {1, 0, 0})}), RingMismatch);
}

TEST_CASE("sum") {
  CHECK(ideal_of("ideal(x1) + ideal(x2)") == ideal_of("ideal(x1, x2)"));
  CHECK(ideal_of("ideal(x1*x2) + ideal(x1)") == ideal_of("ring(1,1); ideal(x1)"));
}

TEST_CASE("product and power") {
  CHECK(ideal_of("ideal(x1)*ideal(x2)") == ideal_of("ideal(x1*x2)"));
  CHECK(ideal_of("prime(x1,x2)*prime(x2,x3)") == ideal_of("ideal(x1*x2, x1*x3, x2^2, x2*x3)"));
  CHECK(ideal_of("prime(x1,x2)^2") == ideal_of("ideal(x1^2, x1*x2, x2^2)"));
  const MonomialIdeal i = ideal_of("ideal(x1*x2, x3)");
  CHECK(power(i, 1) == i);
  CHECK(power(i, 0).is_unit());
}

TEST_CASE("intersect") {
  CHECK(ideal_of("ideal(x1) & ideal(x2)") == ideal_of("ideal(x1*x2)"));
  CHECK(ideal_of("ideal(x1) & ideal(x1^2, x2^2) & ideal(x2)") == ideal_of("ideal(x1*x2^2, x1^2*x2)"));
  CHECK(ideal_of("prime(x1,x2) & prime(x2,x3)") == ideal_of("ideal(x2, x1*x3)"));
  const MonomialIdeal parts[] = {ideal_of("ideal(x1, x2^3)"), ideal_of("ideal(x1^2, x2)")};
  CHECK(intersect_all(parts) == ideal_of("ideal(x1^2, x1*x2, x2^3)"));
  CHECK_THROWS_AS(intersect_all(std::span<const MonomialIdeal>{}), InvalidArgument);
}

TEST_CASE("colon") {
  const MonomialIdeal i = ideal_of("ideal(x1*x2^2, x1^2*x2)");
  const RingPtr r = i.ring();
  CHECK(colon(i, Monomial(r, {1, 1})) == ideal_of("ideal(x1, x2)"));
  CHECK(colon(i, Monomial(r)) == i);
  CHECK(colon(i, ideal_of("ideal(x1, x2)")) == ideal_of("ideal(x1^2*x2, x1*x2^2) : ideal(x1, x2)"));
  CHECK(colon(i, ideal_of("ideal(x1, x2)")) == ideal_of("ideal(x1*x2)"));
  CHECK_THROWS_AS(colon(i, MonomialIdeal::zero(r)), InvalidArgument);
}

TEST_CASE("bracket power") {
  CHECK(bracket_power(ideal_of("prime(x1,x2)"), 2) == ideal_of("ideal(x1^2, x2^2)"));
  const MonomialIdeal i = ideal_of("ring(1,1,1); ideal(x1, x2)");
  const MonomialIdeal j = ideal_of("ideal(x2, x3)");
  CHECK(bracket_power(intersect(i, j), 2) == intersect(bracket_power(i, 2), bracket_power(j, 2)));
  CHECK(ideal_of("prime(x1,x2)[3]") == ideal_of("ideal(x1^3, x2^3)"));
}

TEST_CASE("localize") {
  const MonomialIdeal i = ideal_of("ideal(x1*x2, x2*x3)");
  const RingPtr r = i.ring();
  CHECK(localize(i, MonomialPrime(r, {0, 1})) == ideal_of("ring(1,1,1); ideal(x2)"));
  CHECK(localize(i, MonomialPrime(r, {0, 1, 2})) == i);
  const MonomialIdeal k = ideal_of("ideal(x1^2*x2)");
  CHECK(localize(k, MonomialPrime(k.ring(), {1})) == ideal_of("ring(1,1); ideal(x2)"));
  CHECK_THROWS_AS(MonomialPrime(r, {}), InvalidArgument);
}

TEST_CASE("membership and queries") {
  const MonomialIdeal i = ideal_of("ring(1,1,1); ideal(x1*x2)");
  CHECK(i.contains(Monomial(i.ring(), {2, 1, 0})));
  CHECK_FALSE(i.contains(Monomial(i.ring(), {2, 0, 5})));
  CHECK(support(i) == std::vector<std::size_t>{0, 1});
  CHECK(lcm_of_generators(ideal_of("ideal(x1^2*x2, x2^3)")) == Monomial(BlockedRing::plain(2), {2, 3}));
  CHECK(generated_in_single_degree(ideal_of("ideal(x1*x2, x3^2)")) == std::optional<unsigned>(2));
  CHECK_FALSE(generated_in_single_degree(ideal_of("ideal(x1, x2^2)")).has_value());
  CHECK(is_subset(ideal_of("ideal(x1^2, x1*x2)"), ideal_of("ideal(x1, x2^5)")));
  CHECK_FALSE(is_subset(ideal_of("ideal(x1, x2)"), ideal_of("ring(1,1); ideal(x1)")));
}

TEST_CASE("zero and unit ideals print") {
  const RingPtr r = BlockedRing::plain(2);
  CHECK(MonomialIdeal::zero(r).to_string() == "(0)");
  CHECK(MonomialIdeal::unit(r).is_unit());
  CHECK(MonomialIdeal::unit(r).to_string() == "(1)");
}

TEST_CASE("operations reject mixed rings") {
  const MonomialIdeal a = ideal_of("ideal(x1, x2)");
  const MonomialIdeal b = ideal_of("ideal(x1, x3)");
  CHECK_THROWS_AS(sum(a, b), RingMismatch);
  CHECK_THROWS_AS(product(a, b), RingMismatch);
  CHECK_THROWS_AS(intersect(a, b), RingMismatch);
}

TEST_CASE("box and membership table agree with naive membership") {
  const MonomialIdeal i = ideal_of("ideal(x1^2*x2, x2^3, x1*x3^2)");
  const MembershipTable table(i);
  REQUIRE(table.dense());
  const auto gens = exponent_rows(i);
  test::for_each_point({3, 4, 3}, [&](const Exps& e) {
    std::vector<Exponent> x(e.begin(), e.end());
    CHECK(table.contains(x.data()) == test::naive_contains(gens, e));
  });
  const auto box = Box::make(std::vector<Exponent>{2, 1}, 100);
  REQUIRE(box.has_value());
  CHECK(box->size() == 6);
  CHECK_FALSE(Box::make(std::vector<Exponent>{9, 9}, 10).has_value());
  std::vector<Exponent> p{0, 0};
  std::size_t count = 1;
  while (box->next(p.data())) ++count;
  CHECK(count == 6);
}
