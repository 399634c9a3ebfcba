#include "jsdmix/pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jsdmix/kernels.hpp"

namespace jsdmix {
namespace {

void validate_mass(const AlphabetPtr& alphabet,
                   const std::vector<double>& mass) {
  if (!alphabet) throw std::invalid_argument("pmf needs an alphabet");
  if (mass.size() != alphabet->size()) {
    throw std::invalid_argument(
        "pmf has " + std::to_string(mass.size()) + " entries for " +
        std::to_string(alphabet->size()) + " symbols");
  }
  double sum = 0.0;
  for (double v : mass) {
    if (!(v >= 0.0)) {  // catches negatives and NaN
      throw std::invalid_argument("pmf entry " + std::to_string(v) +
                                  " is not a probability");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("pmf mass sums to " + std::to_string(sum) +
                                ", not 1");
  }
}

}  // namespace

Weight::Weight(double v) : v_(v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::domain_error("weight " + std::to_string(v) +
                            " outside [0,1]");
  }
}

Pmf::Pmf(AlphabetPtr alphabet, std::vector<double> mass)
    : alphabet_(std::move(alphabet)), mass_(std::move(mass)) {
  validate_mass(alphabet_, mass_);
}

Pmf::Pmf(AlphabetPtr alphabet, std::initializer_list<double> mass)
    : Pmf(std::move(alphabet), std::vector<double>(mass)) {}

Pmf Pmf::normalized(AlphabetPtr alphabet, std::vector<double> weights) {
  double sum = 0.0;
  for (double v : weights) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("negative weight in normalized()");
    }
    sum += v;
  }
  if (sum <= 0.0) {
    throw std::invalid_argument("normalized() needs positive total weight");
  }
  for (double& v : weights) v /= sum;
  return Pmf(std::move(alphabet), std::move(weights));
}

std::vector<std::size_t> support(const Pmf& r) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > 0.0) idx.push_back(i);
  }
  return idx;
}

bool same_alphabet(const Pmf& a, const Pmf& b) {
  return a.alphabet() == b.alphabet() || *a.alphabet() == *b.alphabet();
}

Pmf convex_combine(const std::vector<Weight>& weights,
                   const std::vector<Pmf>& pmfs) {
  if (weights.empty() || weights.size() != pmfs.size()) {
    throw std::invalid_argument("convex_combine needs matching nonempty lists");
  }
  double wsum = 0.0;
  for (const Weight& w : weights) wsum += w.value();
  if (std::abs(wsum - 1.0) > 1e-12) {
    throw std::invalid_argument("convex_combine weights sum to " +
                                std::to_string(wsum));
  }
  for (std::size_t k = 1; k < pmfs.size(); ++k) {
    if (!same_alphabet(pmfs[0], pmfs[k])) {
      throw std::invalid_argument("convex_combine alphabets differ");
    }
  }
  const std::size_t n = pmfs[0].size();
  std::vector<double> out(n, 0.0);
  if (pmfs.size() == 2) {
    kernels::active_kernels().mix2(pmfs[0].data(), pmfs[1].data(),
                                   weights[0].value(), weights[1].value(),
                                   out.data(), n);
  } else {
    for (std::size_t k = 0; k < pmfs.size(); ++k) {
      const double w = weights[k].value();
      const double* p = pmfs[k].data();
      for (std::size_t i = 0; i < n; ++i) out[i] += w * p[i];
    }
  }
  // clean up -0 and the like so downstream support tests stay exact
  for (double& v : out) {
    if (v <= 0.0) v = 0.0;
  }
  return Pmf(pmfs[0].alphabet(), std::move(out));
}

}  // namespace jsdmix
