#pragma once

#include <random>

namespace regdp {

// Canonical uniform double in [0, 1); fixed bit recipe so seeded runs
// reproduce exactly regardless of library internals.
inline double u01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace regdp
