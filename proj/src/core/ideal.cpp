// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/ideal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "monideal/error.hpp"
#include "monideal/limits.hpp"
#include "monideal/prime.hpp"

namespace monideal {
namespace {

unsigned row_degree(const Exponent* row, std::size_t n) {
  return std::accumulate(row, row + n, 0u);
}

// Lex order on exponent vectors; padding lanes are zero so comparing the
// whole stride is the same as comparing the variables.
bool lex_greater(const Exponent* a, const Exponent* b, std::size_t stride) {
  return std::lexicographical_compare(b, b + stride, a, a + stride);
}

void sort_canonical(std::vector<Exponent>& rows, std::size_t stride) {
  const std::size_t count = rows.size() / stride;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return lex_greater(rows.data() + x * stride, rows.data() + y * stride, stride);
  });
  std::vector<Exponent> sorted(rows.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::copy_n(rows.data() + order[i] * stride, stride, sorted.data() + i * stride);
  }
  rows.swap(sorted);
}

// Divisibility-minimal subset of `rows` in canonical order. Candidates are
// visited by ascending degree so each one only has to be tested against the
// accepted rows of strictly smaller degree.
std::vector<Exponent> minimal_rows(std::size_t stride, const std::vector<Exponent>& rows) {
  const std::size_t count = rows.size() / stride;
  if (count == 0) return {};
  const auto& k = kernels::active();

  std::vector<unsigned> degree(count);
  for (std::size_t i = 0; i < count; ++i) degree[i] = row_degree(rows.data() + i * stride, stride);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (degree[x] != degree[y]) return degree[x] < degree[y];
    return lex_greater(rows.data() + x * stride, rows.data() + y * stride, stride);
  });

  std::vector<Exponent> accepted;
  std::vector<unsigned> accepted_degree;
  std::size_t lower_end = 0;
  const Exponent* previous = nullptr;
  for (std::size_t idx : order) {
    const Exponent* row = rows.data() + idx * stride;
    if (previous != nullptr && k.equal(previous, row, stride)) continue;
    previous = row;
    while (lower_end < accepted_degree.size() && accepted_degree[lower_end] < degree[idx]) {
      ++lower_end;
    }
    if (k.find_divisor(accepted.data(), lower_end, stride, row) >= 0) continue;
    accepted.insert(accepted.end(), row, row + stride);
    accepted_degree.push_back(degree[idx]);
  }
  if (accepted_degree.size() > limits().max_generators) {
    throw ResourceLimit("ideal has " + std::to_string(accepted_degree.size()) +
                        " minimal generators (cap " + std::to_string(limits().max_generators) +
                        ")");
  }
  sort_canonical(accepted, stride);
  return accepted;
}

void check_candidates(std::size_t a, std::size_t b, const char* op) {
  if (a != 0 && b > limits().max_candidates / a) {
    throw ResourceLimit(std::string(op) + ": " + std::to_string(a) + " x " + std::to_string(b) +
                        " candidate generators exceed the cap");
  }
}

template <typename Kernel>
MonomialIdeal pairwise(const MonomialIdeal& a, const MonomialIdeal& b, const char* op,
                       Kernel kernel) {
  require_same_ring(a.ring(), b.ring(), op);
  check_candidates(a.size(), b.size(), op);
  const std::size_t stride = a.stride();
  std::vector<Exponent> rows(a.size() * b.size() * stride);
  Exponent* out = rows.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j, out += stride) kernel(a.row(i), b.row(j), out, stride);
  }
  return canonical_ideal(a.ring(), minimal_rows(stride, rows));
}

}  // namespace

MonomialIdeal canonical_ideal(RingPtr ring, std::vector<Exponent> rows) {
  return MonomialIdeal(MonomialIdeal::Canonical{}, std::move(ring), std::move(rows));
}

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("ideal needs a ring");
}

MonomialIdeal::MonomialIdeal(Canonical, RingPtr ring, std::vector<Exponent> rows)
    : ring_(std::move(ring)), rows_(std::move(rows)) {
  count_ = rows_.size() / ring_->stride();
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::span<const Monomial> gens) : MonomialIdeal(ring) {
  std::vector<Exponent> rows;
  rows.reserve(gens.size() * stride());
  for (const Monomial& m : gens) {
    require_same_ring(ring_, m.ring(), "minimalize");
    rows.insert(rows.end(), m.data(), m.data() + stride());
  }
  rows_ = minimal_rows(stride(), rows);
  count_ = rows_.size() / stride();
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::initializer_list<Monomial> gens)
    : MonomialIdeal(std::move(ring), std::span<const Monomial>(gens.begin(), gens.size())) {}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  std::vector<Exponent> rows(ring->stride(), 0);
  return canonical_ideal(std::move(ring), std::move(rows));
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  return canonical_ideal(m.ring(), std::vector<Exponent>(m.data(), m.data() + m.ring()->stride()));
}

MonomialIdeal MonomialIdeal::from_variables(RingPtr ring, std::span<const std::size_t> vars) {
  std::vector<Monomial> gens;
  for (std::size_t v : vars) gens.push_back(Monomial::variable(ring, v));
  return MonomialIdeal(std::move(ring), gens);
}

MonomialIdeal MonomialIdeal::from_rows(RingPtr ring, std::vector<Exponent> rows) {
  const std::size_t stride = ring->stride();
  if (rows.size() % stride != 0) throw InvalidArgument("row buffer is not a multiple of the stride");
  return canonical_ideal(ring, minimal_rows(stride, rows));
}

std::size_t MonomialIdeal::stride() const noexcept { return ring_->stride(); }

bool MonomialIdeal::is_unit() const noexcept {
  return count_ == 1 && std::all_of(rows_.begin(), rows_.end(), [](Exponent e) { return e == 0; });
}

Monomial MonomialIdeal::generator(std::size_t i) const {
  if (i >= count_) throw InvalidArgument("generator index out of range");
  return Monomial::from_row(ring_, row(i));
}

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(generator(i));
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(ring_, m.ring(), "contains");
  return contains_row(m.data());
}

bool MonomialIdeal::contains_row(const Exponent* row) const {
  return kernels::active().find_divisor(rows_.data(), count_, stride(), row) >= 0;
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < count_; ++i) {
    if (i != 0) out += ", ";
    out += generator(i).to_string();
  }
  return out + ")";
}

MonomialIdeal minimalize(RingPtr ring, std::span<const Monomial> gens) {
  return MonomialIdeal(std::move(ring), gens);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  std::vector<Exponent> rows(a.rows());
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return MonomialIdeal::from_rows(a.ring(), std::move(rows));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  return pairwise(a, b, "product", [](const Exponent* x, const Exponent* y, Exponent* out,
                                      std::size_t stride) {
    if (!kernels::active().add(x, y, out, stride)) {
      throw ResourceLimit("exponent overflow in product");
    }
  });
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k) {
  if (k == 0) return MonomialIdeal::unit(a.ring());
  MonomialIdeal result = a;
  for (unsigned i = 1; i < k; ++i) result = product(result, a);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  return pairwise(a, b, "intersect", [](const Exponent* x, const Exponent* y, Exponent* out,
                                        std::size_t stride) {
    kernels::active().lcm(x, y, out, stride);
  });
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> parts) {
  if (parts.empty()) throw InvalidArgument("intersection of no ideals");
  MonomialIdeal result = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) result = intersect(result, parts[i]);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f) {
  require_same_ring(a.ring(), f.ring(), "colon");
  const std::size_t stride = a.stride();
  std::vector<Exponent> rows(a.rows().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    kernels::active().quotient(a.row(i), f.data(), rows.data() + i * stride, stride);
  }
  return MonomialIdeal::from_rows(a.ring(), std::move(rows));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "colon");
  if (b.is_zero()) throw InvalidArgument("colon by the zero ideal");
  MonomialIdeal result = colon(a, b.generator(0));
  for (std::size_t i = 1; i < b.size(); ++i) result = intersect(result, colon(a, b.generator(i)));
  return result;
}

MonomialIdeal bracket_power(const MonomialIdeal& a, unsigned k) {
  if (a.is_zero()) return a;
  if (k == 0) return MonomialIdeal::unit(a.ring());
  std::vector<Exponent> rows(a.rows());
  for (Exponent& e : rows) {
    const unsigned long long scaled = static_cast<unsigned long long>(e) * k;
    if (scaled > std::numeric_limits<Exponent>::max()) {
      throw ResourceLimit("exponent overflow in bracket power");
    }
    e = static_cast<Exponent>(scaled);
  }
  // Scaling by k > 0 preserves both minimality and lex order.
  return canonical_ideal(a.ring(), std::move(rows));
}

MonomialIdeal localize(const MonomialIdeal& a, const MonomialPrime& p) {
  require_same_ring(a.ring(), p.ring(), "localize");
  const std::size_t stride = a.stride();
  std::vector<Exponent> rows(a.rows());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t v = 0; v < a.ring()->total_vars(); ++v) {
      if (!p.contains(v)) rows[i * stride + v] = 0;
    }
  }
  return MonomialIdeal::from_rows(a.ring(), std::move(rows));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "is_subset");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b.contains_row(a.row(i))) return false;
  }
  return true;
}

std::vector<std::size_t> support(const MonomialIdeal& a) {
  std::vector<std::size_t> out;
  const Monomial l = lcm_of_generators(a);
  for (std::size_t v = 0; v < l.num_vars(); ++v) {
    if (l[v] != 0) out.push_back(v);
  }
  return out;
}

Monomial lcm_of_generators(const MonomialIdeal& a) {
  std::vector<Exponent> row(a.stride());
  kernels::active().row_max(a.rows().data(), a.size(), a.stride(), row.data());
  return Monomial::from_row(a.ring(), row.data());
}

std::optional<unsigned> generated_in_single_degree(const MonomialIdeal& a) {
  if (a.is_zero()) return std::nullopt;
  const unsigned d = row_degree(a.row(0), a.stride());
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (row_degree(a.row(i), a.stride()) != d) return std::nullopt;
  }
  return d;
}

}  // namespace monideal
