// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <algorithm>
#include <map>

#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"
#include "monideal/limits.hpp"
#include "monideal/membership.hpp"

namespace monideal {

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    if (bounds[v] != 0) gens.push_back(Monomial::variable(ring, v, bounds[v]));
  }
  return MonomialIdeal(ring, gens);
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    if (bounds[v] != 0) vars.push_back(v);
  }
  return MonomialPrime(ring, std::move(vars));
}

bool IrreducibleComponent::contains_row(const Exponent* exps) const {
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    if (bounds[v] != 0 && exps[v] >= bounds[v]) return true;
  }
  return false;
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  for (std::size_t v = 0; v < bounds.size(); ++v) {
    if (other.bounds[v] == 0) continue;
    if (bounds[v] == 0 || bounds[v] > other.bounds[v]) return false;
  }
  return true;
}

std::string IrreducibleComponent::to_string() const { return ideal().to_string(); }

bool component_less(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  const MonomialPrime ra = a.radical();
  const MonomialPrime rb = b.radical();
  if (ra != rb) return ra < rb;
  return a.bounds < b.bounds;
}

namespace {

void require_proper(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw ZeroOrUnitIdeal(std::string(op) + " of the zero ideal");
  if (ideal.is_unit()) throw ZeroOrUnitIdeal(std::string(op) + " of the unit ideal");
}

// Drops components that contain another one, then sorts.
std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> comps) {
  std::sort(comps.begin(), comps.end(), component_less);
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      redundant = j != i && comps[i].contains(comps[j]);
    }
    if (!redundant) out.push_back(comps[i]);
  }
  return out;
}

class Splitter {
 public:
  explicit Splitter(RingPtr ring) : ring_(std::move(ring)) {}

  const std::vector<IrreducibleComponent>& run(const MonomialIdeal& ideal) {
    auto it = memo_.find(ideal.rows());
    if (it != memo_.end()) return it->second;

    const std::size_t n = ring_->total_vars();
    const std::size_t stride = ideal.stride();
    std::vector<IrreducibleComponent> result;
    std::size_t split = ideal.size();
    for (std::size_t i = 0; i < ideal.size() && split == ideal.size(); ++i) {
      const Exponent* row = ideal.row(i);
      if (std::count_if(row, row + n, [](Exponent e) { return e != 0; }) > 1) split = i;
    }
    if (split == ideal.size()) {
      // Pure powers only: already irreducible.
      IrreducibleComponent c{ring_, std::vector<Exponent>(n, 0)};
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        for (std::size_t v = 0; v < n; ++v) {
          if (ideal.row(i)[v] != 0) c.bounds[v] = ideal.row(i)[v];
        }
      }
      result.push_back(std::move(c));
    } else {
      const Exponent* u = ideal.row(split);
      const std::size_t j = static_cast<std::size_t>(
          std::find_if(u, u + n, [](Exponent e) { return e != 0; }) - u);
      std::vector<Exponent> left, right;
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (i == split) continue;
        left.insert(left.end(), ideal.row(i), ideal.row(i) + stride);
      }
      right = left;
      std::vector<Exponent> pure(stride, 0);
      pure[j] = u[j];
      std::vector<Exponent> rest(u, u + stride);
      rest[j] = 0;
      left.insert(left.end(), pure.begin(), pure.end());
      right.insert(right.end(), rest.begin(), rest.end());
      for (const auto* rows : {&left, &right}) {
        const auto& part = run(MonomialIdeal::from_rows(ring_, *rows));
        result.insert(result.end(), part.begin(), part.end());
      }
      result = irredundant(std::move(result));
    }
    return memo_.emplace(ideal.rows(), std::move(result)).first->second;
  }

 private:
  RingPtr ring_;
  std::map<std::vector<Exponent>, std::vector<IrreducibleComponent>> memo_;
};

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition_by_splitting(const MonomialIdeal& ideal) {
  require_proper(ideal, "irreducible decomposition");
  Splitter splitter(ideal.ring());
  return irredundant(splitter.run(ideal));
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper(ideal, "irreducible decomposition");
  const MembershipTable table(ideal);
  if (!table.dense()) return irreducible_decomposition_by_splitting(ideal);

  const Box& box = table.box();
  const auto& a = box.bounds();
  const std::size_t n = a.size();
  std::vector<IrreducibleComponent> comps;
  std::vector<Exponent> b(n, 0);
  std::size_t idx = 0;
  do {
    if (!table.contains_index(idx)) {
      // A maximal standard monomial of I + (x_j^{a_j+1}): every step up
      // lands in the ideal or leaves the box.
      bool maximal = true;
      for (std::size_t j = 0; j < n && maximal; ++j) {
        maximal = b[j] == a[j] || table.contains_index(idx + box.radix(j));
      }
      if (maximal) {
        IrreducibleComponent c{ideal.ring(), std::vector<Exponent>(n, 0)};
        for (std::size_t j = 0; j < n; ++j) {
          if (b[j] < a[j]) c.bounds[j] = static_cast<Exponent>(b[j] + 1);
        }
        comps.push_back(std::move(c));
      }
    }
    ++idx;
  } while (box.next(b.data()));
  return irredundant(std::move(comps));
}

}  // namespace monideal
