#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "jsdmix/pmf.hpp"

namespace jsdmix {

// All randomness in the project flows through mt19937_64 plus the explicit
// mappings below. std::uniform_real_distribution and friends are avoided
// because their output sequences are implementation-defined; these are
// reproducible across standard libraries.
inline constexpr const char* kRngName = "mt19937_64";

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

// Flat Dirichlet draw: normalized independent unit exponentials. Full
// support with probability 1.
Pmf random_pmf(std::mt19937_64& g, const AlphabetPtr& alphabet);

// Same, but the mass is confined to the given indices; all other symbols
// get exactly 0.
Pmf random_pmf_on(std::mt19937_64& g, const AlphabetPtr& alphabet,
                  const std::vector<std::size_t>& indices);

}  // namespace jsdmix
