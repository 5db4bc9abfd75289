// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/prime.hpp"

#include <algorithm>

#include "monideal/error.hpp"

namespace monideal {

MonomialPrime::MonomialPrime(RingPtr ring, std::vector<std::size_t> vars)
    : ring_(std::move(ring)), vars_(std::move(vars)) {
  if (!ring_) throw InvalidArgument("prime needs a ring");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty()) throw InvalidArgument("monomial prime with empty support");
  if (vars_.back() >= ring_->total_vars()) throw InvalidArgument("prime variable out of range");
}

bool MonomialPrime::contains(std::size_t var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

MonomialIdeal MonomialPrime::ideal() const { return MonomialIdeal::from_variables(ring_, vars_); }

std::vector<std::string> MonomialPrime::names() const {
  std::vector<std::string> out;
  for (std::size_t v : vars_) out.push_back(ring_->variable_name(v));
  return out;
}

std::string MonomialPrime::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i != 0) out += ", ";
    out += ring_->variable_name(vars_[i]);
  }
  return out + ")";
}

void canonicalize(std::vector<MonomialPrime>& primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
}

}  // namespace monideal
