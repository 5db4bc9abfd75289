// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace monideal {

class BlockedRing;
using RingPtr = std::shared_ptr<const BlockedRing>;

/// Polynomial ring whose variables are partitioned into blocks
/// x_{i1}, ..., x_{i m_i}. A plain ring K[x_1..x_n] is the case m_i = 1.
///
/// Variables are numbered 0..total_vars()-1 block by block, which is also the
/// variable order x_{11} > x_{12} > ... > x_{21} > ... used for lex.
class BlockedRing {
 public:
  static RingPtr make(std::vector<std::size_t> block_sizes);
  static RingPtr plain(std::size_t n);

  const std::vector<std::size_t>& block_sizes() const noexcept { return block_sizes_; }
  std::size_t num_blocks() const noexcept { return block_sizes_.size(); }
  std::size_t total_vars() const noexcept { return total_vars_; }
  // Padded row length of exponent vectors over this ring.
  std::size_t stride() const noexcept { return stride_; }
  bool is_plain() const noexcept { return total_vars_ == block_sizes_.size(); }

  std::size_t block_offset(std::size_t block) const { return offsets_.at(block); }
  std::size_t block_size(std::size_t block) const { return block_sizes_.at(block); }
  std::size_t variable(std::size_t block, std::size_t j) const;
  std::size_t block_of(std::size_t var) const { return block_of_.at(var); }

  // "x3" in plain rings, "x21" in blocked rings; "x2_1" only when the
  // concatenated form would collide.
  const std::string& variable_name(std::size_t var) const { return names_.at(var); }
  // Accepts the printed name and the underscore form.
  std::optional<std::size_t> parse_variable(std::string_view name) const;

  friend bool operator==(const BlockedRing& a, const BlockedRing& b) {
    return a.block_sizes_ == b.block_sizes_;
  }

 private:
  explicit BlockedRing(std::vector<std::size_t> block_sizes);

  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> block_of_;
  std::size_t total_vars_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

// Throws RingMismatch naming `op` unless the rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op);

}  // namespace monideal
