// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monideal/constructions.hpp"

namespace monideal {

// Grammar, loosest binding first:
//
//   program  := [ "ring" "(" ints ")" ";" ] expr
//   expr     := sum [ ":" sum ]
//   sum      := inter { "+" inter }
//   inter    := prod { "&" prod }
//   prod     := postfix { "*" postfix }
//   postfix  := atom { "^" INT | "[" INT "]" }
//   atom     := "(" expr ")" | "0" | "1" | variable
//             | "ideal" "(" [ monomial { "," monomial } ] ")"
//             | "prime" "(" variable { "," variable } ")"
//             | "V" "(" INT ";" ints ")"
//             | "transversal" "(" "[" "[" ints "]" { "," "[" ints "]" } "]" [ ";" ints ] ")"
//             | "capped_veronese_gmp" "(" INT "," INT "," INT ")"
//             | "gmp" "(" expr ";" family [ ";" ints ] ")"
//   family   := "veronese" | "squarefree" | "capped" "(" INT ")"
//
// A bare variable is the principal ideal it generates, so x1*x2^2 is the
// principal ideal of that monomial.

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Expr {
  enum class Kind {
    variable,
    literal,
    zero,
    unit,
    prime,
    veronese,
    transversal,
    capped,
    gmp,
    sum,
    product,
    intersect,
    colon,
    power,
    bracket,
  };

  Kind kind = Kind::zero;
  Location loc;
  // variable name
  std::string name;
  // ideal literal: monomials as (variable, exponent) factors
  std::vector<std::vector<std::pair<std::string, unsigned>>> monomials;
  // prime variables
  std::vector<std::string> names;
  // V: degree then caps; capped: m1, m2, d; power/bracket: k; gmp and
  // transversal: block sizes
  std::vector<unsigned> ints;
  // transversal subsets, 1-based
  std::vector<std::vector<unsigned>> sets;
  // gmp family: "veronese", "squarefree" or "capped"
  std::string family;
  unsigned family_cap = 0;
  std::vector<std::unique_ptr<Expr>> args;
};

struct Program {
  std::optional<std::vector<std::size_t>> ring;
  std::unique_ptr<Expr> expr;
};

// Throws SyntaxError with line and column.
Program parse(std::string_view text);

// Ring for bare variables: the declared ring, else the ring of the first
// constructor that fixes one, else the plain ring on the largest x<i>.
Instance evaluate(const Program& program);
Instance evaluate(std::string_view text);

// "ring(b1,...,bn); ideal(...)"; parse and evaluate give the ideal back.
std::string print(const MonomialIdeal& ideal);
std::string print_monomial(const Monomial& m);

}  // namespace monideal
