// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monideal/linalg.hpp"

namespace monideal {

// A simplicial complex on at most 32 vertices, faces stored as bitmasks.
// The empty face counts: a complex holding only it is the (-1)-sphere, a
// complex with no faces at all is the void complex.
class SimplicialComplex {
 public:
  using Face = std::uint32_t;

  SimplicialComplex() = default;
  // Throws InvalidArgument if `faces` is not closed under subsets.
  explicit SimplicialComplex(std::vector<Face> faces);

  bool is_void() const noexcept { return faces_.empty(); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  // Largest face dimension; -2 for the void complex.
  int dimension() const noexcept;
  bool contains(Face f) const;
  // Some vertex v with F ∪ {v} a face for every face F.
  bool is_cone() const;

  // rank of H~_d for d = -1..dimension(), at index d + 1.
  std::vector<std::size_t> reduced_homology(Field field) const;

 private:
  // Sorted by (cardinality, value).
  std::vector<Face> faces_;
};

}  // namespace monideal
