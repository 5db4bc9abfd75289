// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "monideal/error.hpp"

namespace monideal {

namespace {

bool face_less(SimplicialComplex::Face a, SimplicialComplex::Face b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Face> faces) : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), face_less);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  for (Face f : faces_) {
    for (Face rest = f; rest != 0; rest &= rest - 1) {
      if (!contains(f & ~(rest & (~rest + 1)))) {
        throw InvalidArgument("face set is not closed under subsets");
      }
    }
  }
}

int SimplicialComplex::dimension() const noexcept {
  return faces_.empty() ? -2 : std::popcount(faces_.back()) - 1;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, face_less);
}

bool SimplicialComplex::is_cone() const {
  if (faces_.empty()) return false;
  Face vertices = 0;
  for (Face f : faces_) vertices |= f;
  for (Face rest = vertices; rest != 0; rest &= rest - 1) {
    const Face v = rest & (~rest + 1);
    if (std::all_of(faces_.begin(), faces_.end(), [&](Face f) { return contains(f | v); })) {
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> SimplicialComplex::reduced_homology(Field field) const {
  if (faces_.empty()) return {};
  const int top = dimension();
  // by_dim[d + 1] lists the faces of dimension d.
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top) + 2);
  for (Face f : faces_) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // ranks[d + 1] = rank of the boundary C_d -> C_{d-1}; zero for d = -1.
  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    const auto& src = by_dim[k];
    const auto& dst = by_dim[k - 1];
    std::unordered_map<Face, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r) row_of.emplace(dst[r], r);
    IntMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      std::int64_t sign = 1;
      for (Face rest = src[c]; rest != 0; rest &= rest - 1) {
        const Face v = rest & (~rest + 1);
        m.at(row_of.at(src[c] & ~v), c) = sign;
        sign = -sign;
      }
    }
    ranks[k] = rank(m, field);
  }
  std::vector<std::size_t> h(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    h[k] = by_dim[k].size() - ranks[k] - ranks[k + 1];
  }
  return h;
}

}  // namespace monideal
