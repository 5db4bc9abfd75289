// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/monomial.hpp"

#include <limits>
#include <numeric>

#include "monideal/error.hpp"

namespace monideal {
namespace {

Exponent checked_exponent(unsigned value) {
  if (value > std::numeric_limits<Exponent>::max()) {
    throw ResourceLimit("exponent " + std::to_string(value) + " overflows 16 bits");
  }
  return static_cast<Exponent>(value);
}

}  // namespace

Monomial::Monomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("monomial needs a ring");
  exps_.assign(ring_->stride(), 0);
}

Monomial::Monomial(RingPtr ring, std::span<const unsigned> exponents) : Monomial(std::move(ring)) {
  if (exponents.size() != ring_->total_vars()) {
    throw InvalidArgument("exponent vector has length " + std::to_string(exponents.size()) +
                          ", ring has " + std::to_string(ring_->total_vars()) + " variables");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) exps_[i] = checked_exponent(exponents[i]);
}

Monomial::Monomial(RingPtr ring, std::initializer_list<unsigned> exponents)
    : Monomial(std::move(ring), std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(RingPtr ring, std::size_t var, unsigned power) {
  Monomial m(std::move(ring));
  if (var >= m.num_vars()) throw InvalidArgument("variable index out of range");
  m.exps_[var] = checked_exponent(power);
  return m;
}

Monomial Monomial::from_row(RingPtr ring, const Exponent* row) {
  Monomial m(std::move(ring));
  std::copy(row, row + m.exps_.size(), m.exps_.begin());
  return m;
}

std::size_t Monomial::num_vars() const noexcept { return ring_->total_vars(); }

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const noexcept {
  for (Exponent e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(ring_, other.ring_, "divides");
  return kernels::active().divides(data(), other.data(), exps_.size());
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring_->variable_name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

template <typename Kernel>
Monomial binary(const Monomial& a, const Monomial& b, const char* op, Kernel kernel) {
  require_same_ring(a.ring(), b.ring(), op);
  std::vector<Exponent> row(a.ring()->stride());
  kernel(kernels::active(), a.data(), b.data(), row.data(), row.size());
  return Monomial::from_row(a.ring(), row.data());
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return binary(a, b, "monomial product",
                [](const kernels::KernelTable& k, const Exponent* x, const Exponent* y,
                   Exponent* out, std::size_t stride) {
                  if (!k.add(x, y, out, stride)) {
                    throw ResourceLimit("exponent overflow in monomial product");
                  }
                });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return binary(a, b, "lcm", [](const kernels::KernelTable& k, auto... args) { k.lcm(args...); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return binary(a, b, "gcd", [](const kernels::KernelTable& k, auto... args) { k.gcd(args...); });
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  return binary(a, b, "quotient",
                [](const kernels::KernelTable& k, auto... args) { k.quotient(args...); });
}

Monomial pow(const Monomial& a, unsigned k) {
  std::vector<unsigned> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const unsigned long long e = static_cast<unsigned long long>(a[i]) * k;
    if (e > std::numeric_limits<Exponent>::max()) throw ResourceLimit("exponent overflow in power");
    exps[i] = static_cast<unsigned>(e);
  }
  return Monomial(a.ring(), exps);
}

}  // namespace monideal
