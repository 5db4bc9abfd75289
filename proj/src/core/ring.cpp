// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include "monideal/ring.hpp"

#include <string>

#include "monideal/error.hpp"
#include "monideal/kernels.hpp"
#include "monideal/limits.hpp"

namespace monideal {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::resource_limit: return "ResourceLimit";
    case ErrorCode::zero_or_unit_ideal: return "ZeroOrUnitIdeal";
    case ErrorCode::missing_family_entry: return "MissingFamilyEntry";
    case ErrorCode::inclusion_violation: return "InclusionViolation";
    case ErrorCode::condition5_violation: return "Condition5Violation";
    case ErrorCode::syntax_error: return "SyntaxError";
  }
  return "Error";
}

Limits& limits() {
  static Limits instance;
  return instance;
}

BlockedRing::BlockedRing(std::vector<std::size_t> block_sizes)
    : block_sizes_(std::move(block_sizes)) {
  if (block_sizes_.empty()) throw InvalidArgument("ring needs at least one block");
  for (std::size_t i = 0; i < block_sizes_.size(); ++i) {
    if (block_sizes_[i] == 0) {
      throw InvalidArgument("block " + std::to_string(i + 1) + " is empty");
    }
    offsets_.push_back(total_vars_);
    total_vars_ += block_sizes_[i];
    block_of_.insert(block_of_.end(), block_sizes_[i], i);
  }
  stride_ = padded_stride(total_vars_);

  const bool plain = is_plain();
  auto joined = [&](std::size_t i, std::size_t j) {
    return plain ? "x" + std::to_string(i + 1)
                 : "x" + std::to_string(i + 1) + std::to_string(j + 1);
  };
  bool collide = false;
  for (std::size_t i = 0; i < block_sizes_.size() && !collide; ++i) {
    for (std::size_t j = 0; j < block_sizes_[i]; ++j) {
      if (!lookup_.emplace(joined(i, j), 0).second) {
        collide = true;
        break;
      }
    }
  }
  lookup_.clear();
  for (std::size_t i = 0; i < block_sizes_.size(); ++i) {
    for (std::size_t j = 0; j < block_sizes_[i]; ++j) {
      const std::size_t var = offsets_[i] + j;
      const std::string underscored =
          "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      names_.push_back(collide ? underscored : joined(i, j));
      lookup_.emplace(names_.back(), var);
      if (!plain) lookup_.emplace(underscored, var);
    }
  }
}

RingPtr BlockedRing::make(std::vector<std::size_t> block_sizes) {
  return RingPtr(new BlockedRing(std::move(block_sizes)));
}

RingPtr BlockedRing::plain(std::size_t n) {
  return make(std::vector<std::size_t>(n, 1));
}

std::size_t BlockedRing::variable(std::size_t block, std::size_t j) const {
  if (block >= block_sizes_.size() || j >= block_sizes_[block]) {
    throw InvalidArgument("variable index out of range");
  }
  return offsets_[block] + j;
}

std::optional<std::size_t> BlockedRing::parse_variable(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
  if (!same_ring(a, b)) throw RingMismatch(std::string(op) + ": operands live in different rings");
}

}  // namespace monideal
