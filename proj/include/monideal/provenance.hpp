// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The monideal Authors

#pragma once

namespace monideal {

// Where an ideal came from. Stability routines only claim a proof when the
// construction carries a theorem that guarantees the observed behavior.
enum class Provenance {
  generic,
  veronese,
  capped_veronese_gmp,
  gmp,
  transversal,
};

inline const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::generic: return "generic";
    case Provenance::veronese: return "veronese";
    case Provenance::capped_veronese_gmp: return "capped_veronese_gmp";
    case Provenance::gmp: return "gmp";
    case Provenance::transversal: return "transversal";
  }
  return "generic";
}

}  // namespace monideal
