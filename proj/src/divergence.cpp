#include "jsdmix/divergence.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jsdmix/kernels.hpp"

namespace jsdmix {
namespace {

void require_same_alphabet(const Pmf& a, const Pmf& b, const char* op) {
  if (!same_alphabet(a, b)) {
    throw std::invalid_argument(std::string(op) +
                                ": pmfs live on different alphabets");
  }
}

}  // namespace

double entropy(const Pmf& r) {
  return kernels::active_kernels().entropy(r.data(), r.size());
}

double kl_divergence(const Pmf& r1, const Pmf& r2) {
  require_same_alphabet(r1, r2, "kl_divergence");
  return kernels::active_kernels().kl(r1.data(), r2.data(), r1.size());
}

double js_divergence(const Pmf& r1, const Pmf& r2, Weight pi) {
  require_same_alphabet(r1, r2, "js_divergence");
  const double p = pi.value();
  if (p == 0.0 || p == 1.0) return 0.0;  // r_M collapses onto one side

  const auto& k = kernels::active_kernels();
  const std::size_t n = r1.size();
  std::vector<double> rm(n);
  k.mix2(r1.data(), r2.data(), p, 1.0 - p, rm.data(), n);
  const double d1 = k.kl(r1.data(), rm.data(), n);
  const double d2 = k.kl(r2.data(), rm.data(), n);
  const double js = p * d1 + (1.0 - p) * d2;
  return js < 0.0 ? 0.0 : js;  // roundoff guard near zero
}

double js_divergence_entropy_form(const Pmf& r1, const Pmf& r2, Weight pi) {
  require_same_alphabet(r1, r2, "js_divergence");
  const double p = pi.value();
  if (p == 0.0 || p == 1.0) return 0.0;

  const auto& k = kernels::active_kernels();
  const std::size_t n = r1.size();
  std::vector<double> rm(n);
  k.mix2(r1.data(), r2.data(), p, 1.0 - p, rm.data(), n);
  return k.entropy(rm.data(), n) - p * k.entropy(r1.data(), n) -
         (1.0 - p) * k.entropy(r2.data(), n);
}

double sym_js(const Pmf& r1, const Pmf& r2) {
  return js_divergence(r1, r2, Weight(0.5));
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binary_entropy argument outside [0,1]");
  }
  double h = 0.0;
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x);
  return h;
}

}  // namespace jsdmix
