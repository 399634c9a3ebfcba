#pragma once

#include <cstdint>

#include "json.hpp"

namespace jsdmix {

struct VerifyReport {
  nlohmann::ordered_json detail;  // per-observation results, seed, pass
  bool pass;
};

// Aggregate check of the four divergence observations:
//   1. the die example has interior minimizers on its fixed slices,
//   2. sjsd is nondecreasing along rays (lambda, alpha*lambda),
//   3. with a shared component, sjsd is nondecreasing in delta_lambda,
//   4. the disjoint-support decomposition identity holds.
// Randomized parts draw n_random scenarios from the given seed; fixed seed
// gives a byte-identical report.
VerifyReport verify_observations(std::uint64_t seed, int n_random = 1000);

}  // namespace jsdmix
