#include <algorithm>
#include <cmath>
#include <limits>

#include "kernels_internal.hpp"

namespace jsdmix::kernels {
namespace {

void mix2_scalar(const double* a, const double* b, double wa, double wb,
                 double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = wa * a[i] + wb * b[i];
}

double entropy_scalar(const double* p, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] > 0.0) acc -= p[i] * std::log(p[i]);
  }
  return acc;
}

double kl_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] <= 0.0) continue;
    if (b[i] <= 0.0) return std::numeric_limits<double>::infinity();
    acc += a[i] * std::log(a[i] / b[i]);
  }
  return acc;
}

double min_mix_sum_scalar(const double* a, const double* b, double wa,
                          double wb, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::min(wa * a[i], wb * b[i]);
  return acc;
}

double entropy_directional_scalar(const double* d, const double* r,
                                  std::size_t n, bool* defined) {
  *defined = true;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] > 0.0) {
      acc += d[i] * (1.0 + std::log(r[i]));
    } else if (d[i] != 0.0) {
      *defined = false;
    }
  }
  return -acc;
}

}  // namespace

const KernelOps& scalar_kernels() {
  static const KernelOps ops{"scalar",          &mix2_scalar,
                             &entropy_scalar,   &kl_scalar,
                             &min_mix_sum_scalar, &entropy_directional_scalar};
  return ops;
}

}  // namespace jsdmix::kernels
