#pragma once

#include <cstdint>
#include <random>

namespace incidence::detail {

// mt19937_64 output is fixed by the standard; the std distributions are
// not, so the mappings below are spelled out to keep runs reproducible
// across standard libraries.
using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Uniform in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_symmetric(Rng& rng) { return 2.0 * uniform01(rng) - 1.0; }

}  // namespace incidence::detail
