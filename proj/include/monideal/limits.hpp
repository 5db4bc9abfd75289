// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>

namespace monideal {

// Resource caps. Exceeding any of them raises ResourceLimit rather than
// letting a computation run away. The CLI adjusts these from flags before
// doing any work; library code only reads them.
struct Limits {
  // Minimal generators in the result of product / power / intersect.
  std::size_t max_generators = 50'000;
  // Candidate pairs formed by product / intersect before minimalization.
  std::size_t max_candidates = std::size_t{1} << 26;
  // Points of an lcm lattice (Betti computations).
  std::size_t max_lattice = std::size_t{1} << 20;
  // Faces of a single simplicial complex.
  std::size_t max_faces = std::size_t{1} << 20;
  // Witness box of the associated-prime oracle.
  std::size_t max_witness_box = 10'000'000;
  // Exponent box backing dense membership tables and the socle-based
  // decomposition.
  std::size_t max_box = std::size_t{1} << 26;
  // Variables in the support handled by the vertex-cover search.
  std::size_t max_cover_support = 24;
  // Factors of a transversal specification (connected subsets are enumerated).
  std::size_t max_transversal_factors = 20;
};

Limits& limits();

}  // namespace monideal
