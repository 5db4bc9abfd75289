// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/decomposition.hpp"
#include "monideal/error.hpp"

namespace monideal {

AssStability astab(const MonomialIdeal& ideal, unsigned k_max, Provenance provenance) {
  if (k_max == 0) throw InvalidArgument("k_max must be positive");
  AssStability s;
  s.k_max = k_max;
  MonomialIdeal current = ideal;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (k > 1) current = product(current, ideal);
    s.per_power.push_back(associated_primes(current));
  }
  s.index = k_max;
  while (s.index > 1 && s.per_power[s.index - 2] == s.per_power[k_max - 1]) --s.index;
  s.stable_ass = s.per_power.back();
  s.proven = provenance == Provenance::transversal;
  return s;
}

}  // namespace monideal
