#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jsdmix::kernels {

// Dense double-precision kernels over probability vectors. All functions
// treat entries <= 0 as exact zeros, implementing the 0 log 0 := 0
// convention by skipping those terms. Inputs must be finite and non-NaN.
//
// The scalar set is the reference; SIMD sets are selected at runtime and
// must agree with it within a few ULPs per term (equivalence-tested in
// tests/test_kernels.cpp).
struct KernelOps {
  const char* name;

  // dst[i] = wa*a[i] + wb*b[i]
  void (*mix2)(const double* a, const double* b, double wa, double wb,
               double* dst, std::size_t n);

  // -sum_{p[i] > 0} p[i] * ln p[i]
  double (*entropy)(const double* p, std::size_t n);

  // sum_{a[i] > 0} a[i] * ln(a[i]/b[i]); +infinity when absolute
  // continuity fails (a[i] > 0 while b[i] <= 0 for some i)
  double (*kl)(const double* a, const double* b, std::size_t n);

  // sum_i min(wa*a[i], wb*b[i])
  double (*min_mix_sum)(const double* a, const double* b, double wa,
                        double wb, std::size_t n);

  // -sum_{r[i] > 0} d[i] * (1 + ln r[i]): the derivative of entropy along
  // the direction d at the point r. Sets *defined = false when some
  // r[i] <= 0 has d[i] != 0 (the derivative is unbounded there); the
  // return value is unspecified in that case.
  double (*entropy_directional)(const double* d, const double* r,
                                std::size_t n, bool* defined);
};

// Always-available reference implementation.
const KernelOps& scalar_kernels();

// Kernel set picked once per process from CPU features. The environment
// variable JSDMIX_KERNELS=scalar|avx2 overrides the automatic choice.
const KernelOps& active_kernels();

// Switches the active set process-wide. Intended for tests; not safe to
// call concurrently with computations. Throws if the name is unknown or
// the host CPU lacks the required features.
void force_kernels(const std::string& name);

// Names accepted by force_kernels() on this host.
std::vector<std::string> available_kernels();

}  // namespace jsdmix::kernels
