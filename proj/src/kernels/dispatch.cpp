// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "monideal/kernels.hpp"

namespace monideal::kernels {

#if defined(MONIDEAL_HAVE_AVX2)
const KernelTable* avx2_table();
#endif

const KernelTable* avx2() {
#if defined(MONIDEAL_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* choose() {
  const char* env = std::getenv("MONIDEAL_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
  if (const KernelTable* t = avx2()) return t;
  return &scalar();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> table{choose()};
  return table;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void set_active(const KernelTable& table) { slot().store(&table, std::memory_order_release); }

}  // namespace monideal::kernels
