// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. `--slow` adds the eight-variable top-degree case to
// criterion 5.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "monideal/commands.hpp"
#include "monideal/constructions.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/linalg.hpp"
#include "monideal/resolution.hpp"
#include "support.hpp"

using namespace monideal;
using test::Exps;
using test::exponent_rows;
using test::prime_names;
using test::RandomIdeals;

namespace {

// Collects the first few mismatches of a criterion for the report.
struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;
  std::function<void(Check&)> body;
};

std::string cap(unsigned m1, unsigned m2, unsigned d) {
  return "(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(d) + ")";
}

std::size_t fiber_dimension(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring()->total_vars();
  IntMatrix m(ideal.size(), n);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = ideal.row(i)[j];
  }
  return rank(m, Field::rationals());
}

void top_degree_generators(Check& c) {
  const MonomialIdeal l = capped_veronese_gmp(2, 2, 7);
  const std::vector<Exps> gens = {{1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}, {2, 2, 2, 1}};
  c.expect(exponent_rows(l) == gens, "generators: " + l.to_string());
  const std::vector<std::string> primes = {
      "(x11)",      "(x12)",      "(x21)",      "(x22)",      "(x11, x12)",
      "(x11, x21)", "(x11, x22)", "(x12, x21)", "(x12, x22)", "(x21, x22)",
  };
  c.expect(prime_names(associated_primes(l)) == primes, "associated primes differ");
}

void degree_three_example(Check& c) {
  const RingPtr r = BlockedRing::plain(2);
  const MonomialIdeal i(r, {Monomial(r, {1, 2}), Monomial(r, {2, 1})});
  std::vector<std::string> comps;
  for (const auto& x : irreducible_decomposition(i)) comps.push_back(x.to_string());
  std::sort(comps.begin(), comps.end());
  c.expect(comps == std::vector<std::string>{"(x1)", "(x1^2, x2^2)", "(x2)"}, "decomposition of I");
  const MonomialIdeal l = capped_veronese_gmp(2, 2, 3);
  c.expect(height(l) == 2, "height(L) = " + std::to_string(height(l)));
  c.expect(dim_quotient(l) == 2, "dim(T/L) = " + std::to_string(dim_quotient(l)));
  c.expect(is_unmixed(l), "L is not unmixed");
}

void degree_four_regularity(Check& c) {
  const MonomialIdeal l = capped_veronese_gmp(2, 2, 4);
  std::vector<Exps> gens = {
      {2, 1, 1, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {1, 2, 0, 1}, {1, 0, 2, 1}, {0, 1, 2, 1},
      {1, 0, 1, 2}, {0, 1, 1, 2}, {2, 0, 2, 0}, {2, 0, 1, 1}, {2, 0, 0, 2}, {0, 2, 2, 0},
      {0, 2, 0, 2}, {0, 2, 1, 1}, {1, 1, 2, 0}, {1, 1, 0, 2}, {1, 1, 1, 1},
  };
  std::sort(gens.begin(), gens.end());
  c.expect(exponent_rows(l) == gens, "generators differ: " + std::to_string(l.size()) + " found");
  const int r1 = regularity(l);
  const int r2 = regularity(power(l, 2));
  c.expect(r1 == 4, "reg(L) = " + std::to_string(r1));
  c.expect(r2 == 8, "reg(L^2) = " + std::to_string(r2));
}

void ass_characterization(Check& c) {
  for (auto [m1, m2] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const unsigned d = 2 * m1 + 2 * m2 - 1;
    const MonomialIdeal l = capped_veronese_gmp(m1, m2, d);
    const auto ass = associated_primes(l);
    const std::size_t n = l.ring()->total_vars();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<std::size_t> vars;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1) vars.push_back(v);
      }
      const MonomialPrime p(l.ring(), vars);
      const bool in_ass = std::binary_search(ass.begin(), ass.end(), p);
      c.expect(in_ass == (vars.size() <= 2), cap(m1, m2, d) + " " + p.to_string() +
                                                 (in_ass ? " in Ass" : " not in Ass"));
    }
  }
}

void dim_unmixed_grids(Check& c, bool slow) {
  for (unsigned q : {2u, 3u}) {
    const unsigned top = 4 * q - 1;
    for (unsigned d = 2; d <= top; ++d) {
      const MonomialIdeal l = capped_veronese_gmp(q, q, d);
      const std::size_t dim = dim_quotient(l);
      if (d <= 2 * q + 2) c.expect(dim == q, cap(q, q, d) + " dim " + std::to_string(dim));
      if (d == top) c.expect(dim == 2 * q - 1, cap(q, q, d) + " dim " + std::to_string(dim));
      if (q == 2 || d == top) c.expect(is_unmixed(l), cap(q, q, d) + " not unmixed");
    }
  }
  std::vector<std::pair<unsigned, unsigned>> top_cases = {{2, 7}};
  if (slow) top_cases.emplace_back(4, 15);
  for (auto [q, d] : top_cases) {
    const MonomialIdeal l = capped_veronese_gmp(q, q, d);
    std::vector<std::vector<std::size_t>> singletons;
    for (std::size_t v = 0; v < 2 * q; ++v) singletons.push_back({v});
    c.expect(minimal_vertex_covers(l) == singletons, cap(q, q, d) + " covers are not the variables");
    c.expect(height(l) == 1, cap(q, q, d) + " height " + std::to_string(height(l)));
    c.expect(is_unmixed(l), cap(q, q, d) + " not unmixed");
  }
}

void power_linearity(Check& c) {
  for (unsigned m1 : {2u, 3u}) {
    for (unsigned m2 : {2u, 3u}) {
      for (unsigned d = 2; d <= 2 * m1 + 2 * m2 - 1; ++d) {
        const MonomialIdeal l = capped_veronese_gmp(m1, m2, d);
        for (unsigned k = 1; k <= 2; ++k) {
          const MonomialIdeal lk = power(l, k);
          const std::string at = cap(m1, m2, d) + " k=" + std::to_string(k);
          c.expect(has_linear_quotients(lk), at + " no linear quotients");
          const BettiTable table = betti_table(lk);
          for (const auto& e : table.entries()) {
            c.expect(e.total_degree == e.i + k * d, at + " beta_" + std::to_string(e.i) + " in degree " +
                                                        std::to_string(e.total_degree));
          }
        }
      }
    }
  }
}

void transversal_suite(Check& c) {
  const auto specs = shipped_transversal_specs();
  c.expect(specs.size() >= 10, "fewer than 10 specs");
  for (const TransversalSpec& spec : specs) {
    const std::string at = describe(spec);
    const MonomialIdeal l = transversal_build(spec);
    const auto ass = transversal_ass(spec);
    c.expect(ass == associated_primes(l), at + ": transversal_ass != associated_primes");
    c.expect(ass == ass_oracle(l), at + ": transversal_ass != ass_oracle");
    for (unsigned k = 1; k <= 3; ++k) {
      c.expect(transversal_power_decomposition(spec, k).verified, at + ": decomposition fails at k=" + std::to_string(k));
    }
    for (unsigned k = 1; k <= 4; ++k) {
      c.expect(associated_primes(power(l, k)) == ass, at + ": Ass(L^" + std::to_string(k) + ") differs");
    }
    const std::size_t depth = depth_quotient(l);
    for (unsigned k = 2; k <= 3; ++k) {
      c.expect(depth_quotient(power(l, k)) == depth, at + ": depth changes at k=" + std::to_string(k));
    }
    const std::size_t ell = analytic_spread_transversal(l, Provenance::transversal);
    c.expect(ell == l.ring()->total_vars() - depth, at + ": analytic spread formula");
    c.expect(ell == fiber_dimension(l), at + ": total - depth = " + std::to_string(ell) + " but the fiber has dimension " +
                                            std::to_string(fiber_dimension(l)));
    for (unsigned k = 1; k <= 3; ++k) {
      c.expect(associated_primes(bracket_power(l, k)) == ass, at + ": Ass(L^[" + std::to_string(k) + "]) differs");
    }
  }
}

void oracle_equivalence(Check& c) {
  RandomIdeals gen(2024);
  int ass_count = 0;
  while (ass_count < 100) {
    const RingPtr r = BlockedRing::plain(gen.uniform(1, 5));
    const MonomialIdeal a = gen.ideal(r, 6, 3);
    if (a.is_unit()) continue;
    ++ass_count;
    c.expect(associated_primes(a) == ass_oracle(a), "Ass mismatch on " + a.to_string());
  }
  int betti_count = 0;
  while (betti_count < 25) {
    const RingPtr r = BlockedRing::plain(gen.uniform(1, 5));
    const MonomialIdeal a = gen.ideal(r, 6, 3);
    if (a.is_unit()) continue;
    ++betti_count;
    c.expect(betti_table(a) == betti_oracle(a), "Betti mismatch on " + a.to_string());
  }
}

void bracket_identities(Check& c) {
  RandomIdeals gen(31337);
  for (int t = 0; t < 50; ++t) {
    const RingPtr r = BlockedRing::plain(gen.uniform(1, 5));
    const MonomialIdeal a = gen.ideal(r, 4, 3);
    for (unsigned k = 1; k <= 3; ++k) {
      const MonomialIdeal ak = bracket_power(a, k);
      const MonomialIdeal pk = power(a, k);
      c.expect(is_subset(ak, pk), a.to_string() + ": bracket not inside power");
      if (k >= 2) c.expect((ak == pk) == (a.size() == 1), a.to_string() + ": equality iff principal fails");
    }
  }
  for (int t = 0; t < 50; ++t) {
    const RingPtr r = BlockedRing::plain(gen.uniform(1, 5));
    const MonomialIdeal a = gen.ideal(r, 4, 3);
    const MonomialIdeal b = gen.ideal(r, 4, 3);
    for (unsigned k = 1; k <= 3; ++k) {
      c.expect(bracket_power(intersect(a, b), k) == intersect(bracket_power(a, k), bracket_power(b, k)),
               a.to_string() + " & " + b.to_string() + ": intersection identity fails");
    }
  }
}

void maximal_ideal_square(Check& c) {
  const RingPtr base_ring = BlockedRing::plain(2);
  const MonomialIdeal base(base_ring, {Monomial(base_ring, {2, 0}), Monomial(base_ring, {1, 1}),
                                       Monomial(base_ring, {0, 2})});
  const MonomialIdeal l = gmp_build(GmpSpec{base, {2, 2}, GmpFamily::veronese()});
  const std::size_t all[] = {0, 1, 2, 3};
  const MonomialPrime full(l.ring(), {0, 1, 2, 3});
  c.expect(l == power(MonomialIdeal::from_variables(l.ring(), all), 2), "L is not the square of the maximal ideal");
  const AssStability a = astab(l, 3);
  const DepthStability d = dstab(l, 3);
  c.expect(a.index == 1, "astab = " + std::to_string(a.index));
  c.expect(d.index == 1, "dstab = " + std::to_string(d.index));
  for (unsigned k = 1; k <= 3; ++k) {
    const auto& ass = a.per_power[k - 1];
    c.expect(std::find(ass.begin(), ass.end(), full) != ass.end(), "maximal ideal missing at k=" + std::to_string(k));
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else {
      std::fprintf(stderr, "usage: %s [--slow]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "capped_veronese_gmp(2,2,7): 4 generators, 10 associated primes", 1.0, top_degree_generators},
      {2, "two-generator decomposition; capped (2,2,3) height 2, dim 2, unmixed", 1.0, degree_three_example},
      {3, "capped_veronese_gmp(2,2,4): 17 generators, reg(L)=4, reg(L^2)=8", 60.0, degree_four_regularity},
      {4, "P_F in Ass(L) iff |F| <= 2 at d = 2m1+2m2-1", 120.0, ass_characterization},
      {5, slow ? "dim and unmixed grids, height-1 top degree incl. (4,4,15)" : "dim and unmixed grids, height-1 top degree",
       120.0, [slow](Check& c) { dim_unmixed_grids(c, slow); }},
      {6, "L and L^2 have lex linear quotients and linear Betti tables", 600.0, power_linearity},
      {7, "transversal suite: Ass, L^k decomposition, astab, dstab, analytic spread, bracket Ass", 600.0,
       transversal_suite},
      {8, "associated_primes = ass_oracle (100), betti_table = betti_oracle (25)", 300.0, oracle_equivalence},
      {9, "bracket powers: inside powers, equal iff principal, commute with intersection", 60.0, bracket_identities},
      {10, "Veronese GMP of the square of the maximal ideal: astab = dstab = 1", 60.0, maximal_ideal_square},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs < cr.time_limit_s, "took " + std::to_string(secs) + " s, limit " +
                                            std::to_string(cr.time_limit_s) + " s");
    std::printf("%s %2d  %s  (%.2f s)\n", check.ok ? "PASS" : "FAIL", cr.number, cr.title.c_str(), secs);
    for (const auto& note : check.notes) std::printf("        %s\n", note.c_str());
    if (!check.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
