#pragma once

#include <cstdint>
#include <random>

namespace liouville {

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
///
/// std::uniform_real_distribution is implementation-defined, which would make
/// seeded sweeps differ between standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline double random_sign(std::mt19937_64& rng) { return (rng() >> 63) ? -1.0 : 1.0; }

}  // namespace liouville
