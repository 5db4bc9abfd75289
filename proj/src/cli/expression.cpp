// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/expression.hpp"

#include <cctype>
#include <charconv>
#include <functional>

#include "monideal/error.hpp"

namespace monideal {

namespace {

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind = Kind::end;
  std::string text;
  unsigned value = 0;
  Location loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.loc = loc_;
      if (pos_ == text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Kind::ident;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::number;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          throw SyntaxError("number out of range", t.loc.line, t.loc.column);
        }
      } else if (std::string_view("()[],;+*&:^").find(c) != std::string_view::npos) {
        t.kind = Token::Kind::punct;
        t.text = advance();
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", t.loc.line, t.loc.column);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Location loc_;
};

using ExprPtr = std::unique_ptr<Expr>;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program program() {
    Program p;
    if (peek().kind == Token::Kind::ident && peek().text == "ring") {
      next();
      expect("(");
      std::vector<std::size_t> blocks;
      for (unsigned v : ints()) blocks.push_back(v);
      expect(")");
      expect(";");
      p.ring = std::move(blocks);
    }
    p.expr = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at(std::string_view punct) const {
    return peek().kind == Token::Kind::punct && peek().text == punct;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(peek().kind == Token::Kind::end ? what + " at end of input" : what,
                      peek().loc.line, peek().loc.column);
  }

  void expect(std::string_view punct) {
    if (!at(punct)) fail("expected '" + std::string(punct) + "'");
    next();
  }

  unsigned number() {
    if (peek().kind != Token::Kind::number) fail("expected a number");
    return next().value;
  }

  std::string ident() {
    if (peek().kind != Token::Kind::ident) fail("expected a name");
    return next().text;
  }

  std::vector<unsigned> ints() {
    std::vector<unsigned> out{number()};
    while (at(",")) {
      next();
      out.push_back(number());
    }
    return out;
  }

  ExprPtr node(Expr::Kind kind, Location loc) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->loc = loc;
    return e;
  }

  ExprPtr binary(Expr::Kind kind, Location loc, ExprPtr lhs, ExprPtr rhs) {
    auto e = node(kind, loc);
    e->args.push_back(std::move(lhs));
    e->args.push_back(std::move(rhs));
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = sum();
    if (at(":")) {
      const Location loc = next().loc;
      lhs = binary(Expr::Kind::colon, loc, std::move(lhs), sum());
      if (at(":")) fail("colon is not associative; add parentheses");
    }
    return lhs;
  }

  ExprPtr sum() {
    ExprPtr lhs = inter();
    while (at("+")) {
      const Location loc = next().loc;
      lhs = binary(Expr::Kind::sum, loc, std::move(lhs), inter());
    }
    return lhs;
  }

  ExprPtr inter() {
    ExprPtr lhs = prod();
    while (at("&")) {
      const Location loc = next().loc;
      lhs = binary(Expr::Kind::intersect, loc, std::move(lhs), prod());
    }
    return lhs;
  }

  ExprPtr prod() {
    ExprPtr lhs = postfix();
    while (at("*")) {
      const Location loc = next().loc;
      lhs = binary(Expr::Kind::product, loc, std::move(lhs), postfix());
    }
    return lhs;
  }

  ExprPtr postfix() {
    ExprPtr e = atom();
    for (;;) {
      if (at("^")) {
        const Location loc = next().loc;
        auto p = node(Expr::Kind::power, loc);
        p->ints.push_back(number());
        p->args.push_back(std::move(e));
        e = std::move(p);
      } else if (at("[")) {
        const Location loc = next().loc;
        auto p = node(Expr::Kind::bracket, loc);
        p->ints.push_back(number());
        expect("]");
        p->args.push_back(std::move(e));
        e = std::move(p);
      } else {
        return e;
      }
    }
  }

  std::vector<std::pair<std::string, unsigned>> monomial() {
    std::vector<std::pair<std::string, unsigned>> factors;
    do {
      if (!factors.empty() || at("*")) expect("*");
      if (peek().kind == Token::Kind::number) {
        if (number() != 1) fail("monomials have coefficient 1");
        continue;
      }
      std::string name = ident();
      unsigned e = 1;
      if (at("^")) {
        next();
        e = number();
      }
      factors.emplace_back(std::move(name), e);
    } while (at("*"));
    return factors;
  }

  ExprPtr atom() {
    const Location loc = peek().loc;
    if (at("(")) {
      next();
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (peek().kind == Token::Kind::number) {
      const unsigned v = number();
      if (v > 1) fail("only 0 and 1 are ideal constants");
      return node(v == 0 ? Expr::Kind::zero : Expr::Kind::unit, loc);
    }
    const std::string name = ident();
    const bool call = at("(");
    if (name == "ideal" && call) {
      next();
      auto e = node(Expr::Kind::literal, loc);
      if (!at(")")) {
        e->monomials.push_back(monomial());
        while (at(",")) {
          next();
          e->monomials.push_back(monomial());
        }
      }
      expect(")");
      return e;
    }
    if (name == "prime" && call) {
      next();
      auto e = node(Expr::Kind::prime, loc);
      e->names.push_back(ident());
      while (at(",")) {
        next();
        e->names.push_back(ident());
      }
      expect(")");
      return e;
    }
    if (name == "V" && call) {
      next();
      auto e = node(Expr::Kind::veronese, loc);
      e->ints.push_back(number());
      expect(";");
      for (unsigned r : ints()) e->ints.push_back(r);
      expect(")");
      return e;
    }
    if (name == "transversal" && call) {
      next();
      auto e = node(Expr::Kind::transversal, loc);
      expect("[");
      do {
        if (!e->sets.empty()) expect(",");
        expect("[");
        e->sets.push_back(ints());
        expect("]");
      } while (at(","));
      expect("]");
      if (at(";")) {
        next();
        e->ints = ints();
      }
      expect(")");
      return e;
    }
    if (name == "capped_veronese_gmp" && call) {
      next();
      auto e = node(Expr::Kind::capped, loc);
      e->ints = ints();
      if (e->ints.size() != 3) fail("capped_veronese_gmp takes (m1, m2, d)");
      expect(")");
      return e;
    }
    if (name == "gmp" && call) {
      next();
      auto e = node(Expr::Kind::gmp, loc);
      e->args.push_back(expr());
      expect(";");
      e->family = ident();
      if (e->family == "capped") {
        expect("(");
        e->family_cap = number();
        expect(")");
      } else if (e->family != "veronese" && e->family != "squarefree") {
        throw SyntaxError("unknown family '" + e->family + "'", loc.line, loc.column);
      }
      if (at(";")) {
        next();
        e->ints = ints();
      }
      expect(")");
      return e;
    }
    if (call) throw SyntaxError("unknown function '" + name + "'", loc.line, loc.column);
    auto e = node(Expr::Kind::variable, loc);
    e->name = name;
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail_at(const Expr& e, const std::string& what) {
  throw SyntaxError(what, e.loc.line, e.loc.column);
}

// Index i of a name "x<i>", or nullopt.
std::optional<std::size_t> plain_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x') return std::nullopt;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
  if (ec != std::errc() || ptr != name.data() + name.size() || v == 0) return std::nullopt;
  return v;
}

// Visits variable names outside gmp bases (those live in their own ring).
void collect_names(const Expr& e, std::vector<const Expr*>& out) {
  switch (e.kind) {
    case Expr::Kind::variable:
    case Expr::Kind::literal:
    case Expr::Kind::prime:
      out.push_back(&e);
      return;
    case Expr::Kind::gmp:
      return;
    default:
      for (const auto& a : e.args) collect_names(*a, out);
  }
}

const Expr* first_constructor(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::transversal:
    case Expr::Kind::capped:
      return &e;
    case Expr::Kind::gmp:
      return e.ints.empty() ? nullptr : &e;
    default:
      for (const auto& a : e.args) {
        if (const Expr* c = first_constructor(*a)) return c;
      }
      return nullptr;
  }
}

class Evaluator {
 public:
  explicit Evaluator(RingPtr ring) : ring_(std::move(ring)) {}

  Instance eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::variable:
        return generic(MonomialIdeal::principal(Monomial::variable(ring_, var(e, e.name))));
      case Expr::Kind::zero:
        return generic(MonomialIdeal::zero(ring_));
      case Expr::Kind::unit:
        return generic(MonomialIdeal::unit(ring_));
      case Expr::Kind::literal: {
        std::vector<Monomial> gens;
        for (const auto& factors : e.monomials) {
          std::vector<unsigned> exps(ring_->total_vars(), 0);
          for (const auto& [name, power] : factors) exps[var(e, name)] += power;
          gens.emplace_back(ring_, exps);
        }
        return generic(MonomialIdeal(ring_, gens));
      }
      case Expr::Kind::prime: {
        std::vector<std::size_t> vars;
        for (const auto& name : e.names) vars.push_back(var(e, name));
        return generic(MonomialPrime(ring_, vars).ideal());
      }
      case Expr::Kind::veronese: {
        VeroneseSpec spec{std::vector<unsigned>(e.ints.begin() + 1, e.ints.end()), e.ints.front()};
        MonomialIdeal v = veronese_type(spec);
        if (ring_ && ring_->total_vars() == spec.caps.size() && !(*ring_ == *v.ring())) {
          v = MonomialIdeal::from_rows(ring_, v.rows());
        }
        return Instance{v, Provenance::veronese, std::nullopt, std::nullopt, std::nullopt};
      }
      case Expr::Kind::transversal:
        return make_instance(transversal_spec(e));
      case Expr::Kind::capped:
        return make_instance(CappedParams{e.ints[0], e.ints[1], e.ints[2]});
      case Expr::Kind::gmp:
        return gmp(e);
      case Expr::Kind::power: {
        Instance base = eval(*e.args[0]);
        const unsigned k = e.ints[0];
        if (base.transversal && k >= 1) return make_instance(power(*base.transversal, k));
        return generic(power(base.ideal, k));
      }
      case Expr::Kind::bracket:
        return generic(bracket_power(eval(*e.args[0]).ideal, e.ints[0]));
      case Expr::Kind::product: {
        Instance a = eval(*e.args[0]);
        Instance b = eval(*e.args[1]);
        if (a.transversal && b.transversal && a.transversal->n == b.transversal->n &&
            a.transversal->blocks == b.transversal->blocks) {
          TransversalSpec spec = *a.transversal;
          spec.subsets.insert(spec.subsets.end(), b.transversal->subsets.begin(), b.transversal->subsets.end());
          return make_instance(spec);
        }
        return generic(product(a.ideal, b.ideal));
      }
      case Expr::Kind::sum:
        return generic(sum(eval(*e.args[0]).ideal, eval(*e.args[1]).ideal));
      case Expr::Kind::intersect:
        return generic(intersect(eval(*e.args[0]).ideal, eval(*e.args[1]).ideal));
      case Expr::Kind::colon:
        return generic(colon(eval(*e.args[0]).ideal, eval(*e.args[1]).ideal));
    }
    fail_at(e, "unknown expression");
  }

 private:
  static Instance generic(MonomialIdeal ideal) {
    return Instance{std::move(ideal), Provenance::generic, std::nullopt, std::nullopt, std::nullopt};
  }

  std::size_t var(const Expr& e, const std::string& name) const {
    if (!ring_) fail_at(e, "no ring for variable '" + name + "'");
    if (auto v = ring_->parse_variable(name)) return *v;
    fail_at(e, "unknown variable '" + name + "'");
  }

  TransversalSpec transversal_spec(const Expr& e) const {
    TransversalSpec spec;
    std::size_t largest = 0;
    for (const auto& f : e.sets) {
      std::vector<std::size_t> zero_based;
      for (unsigned i : f) {
        if (i == 0) fail_at(e, "transversal subsets are 1-based");
        zero_based.push_back(i - 1);
        largest = std::max<std::size_t>(largest, i);
      }
      spec.subsets.push_back(std::move(zero_based));
    }
    spec.blocks.assign(e.ints.begin(), e.ints.end());
    if (!spec.blocks.empty()) {
      spec.n = spec.blocks.size();
    } else if (ring_ && ring_->is_plain() && ring_->total_vars() >= largest) {
      spec.n = ring_->total_vars();
    } else if (ring_ && !ring_->is_plain() && ring_->num_blocks() >= largest) {
      spec.n = ring_->num_blocks();
      spec.blocks = ring_->block_sizes();
    } else {
      spec.n = largest;
    }
    if (std::all_of(spec.blocks.begin(), spec.blocks.end(), [](std::size_t m) { return m == 1; })) {
      spec.blocks.clear();
    }
    return spec;
  }

  Instance gmp(const Expr& e) const {
    std::vector<std::size_t> blocks(e.ints.begin(), e.ints.end());
    if (blocks.empty()) {
      if (!ring_) fail_at(e, "gmp needs block sizes or a ring declaration");
      blocks = ring_->block_sizes();
    }
    Evaluator inner(BlockedRing::plain(blocks.size()));
    const MonomialIdeal base = inner.eval(*e.args[0]).ideal;
    GmpFamily family = e.family == "veronese"     ? GmpFamily::veronese()
                       : e.family == "squarefree" ? GmpFamily::squarefree()
                                                  : GmpFamily::capped(e.family_cap);
    GmpSpec spec{base, blocks, std::move(family)};
    MonomialIdeal ideal = gmp_build(spec);
    return Instance{std::move(ideal), Provenance::gmp, std::nullopt, std::nullopt, std::move(spec)};
  }

  RingPtr ring_;
};

}  // namespace

Program parse(std::string_view text) { return Parser(Lexer(text).run()).program(); }

Instance evaluate(const Program& program) {
  RingPtr ring;
  if (program.ring) {
    ring = BlockedRing::make(*program.ring);
  } else if (const Expr* c = first_constructor(*program.expr)) {
    ring = Evaluator(nullptr).eval(*c).ideal.ring();
  } else {
    std::vector<const Expr*> uses;
    collect_names(*program.expr, uses);
    std::size_t largest = 0;
    for (const Expr* e : uses) {
      std::vector<std::string> names = e->names;
      if (e->kind == Expr::Kind::variable) names.push_back(e->name);
      for (const auto& m : e->monomials) {
        for (const auto& f : m) names.push_back(f.first);
      }
      for (const auto& n : names) {
        const auto i = plain_index(n);
        if (!i) fail_at(*e, "cannot infer a ring for '" + n + "'; declare one with ring(...)");
        largest = std::max(largest, *i);
      }
    }
    ring = BlockedRing::plain(std::max<std::size_t>(largest, 1));
  }
  return Evaluator(ring).eval(*program.expr);
}

Instance evaluate(std::string_view text) { return evaluate(parse(text)); }

std::string print_monomial(const Monomial& m) { return m.to_string(); }

std::string print(const MonomialIdeal& ideal) {
  std::string out = "ring(";
  const auto& blocks = ideal.ring()->block_sizes();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(blocks[i]);
  }
  out += "); ideal(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += ideal.generator(i).to_string();
  }
  return out + ")";
}

}  // namespace monideal
