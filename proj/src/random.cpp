#include "jsdmix/random.hpp"

#include <cmath>
#include <stdexcept>

namespace jsdmix {
namespace {

// strictly positive unit exponential, so generated pmfs have full support
double exponential(std::mt19937_64& g) {
  double u = uniform01(g);
  while (u == 0.0) u = uniform01(g);
  return -std::log1p(-u);
}

}  // namespace

Pmf random_pmf(std::mt19937_64& g, const AlphabetPtr& alphabet) {
  std::vector<double> w(alphabet->size());
  for (double& v : w) v = exponential(g);
  return Pmf::normalized(alphabet, std::move(w));
}

Pmf random_pmf_on(std::mt19937_64& g, const AlphabetPtr& alphabet,
                  const std::vector<std::size_t>& indices) {
  if (indices.empty()) {
    throw std::invalid_argument("random_pmf_on needs a nonempty index set");
  }
  std::vector<double> w(indices.size());
  double sum = 0.0;
  for (double& v : w) {
    v = exponential(g);
    sum += v;
  }
  std::vector<double> mass(alphabet->size(), 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= mass.size()) {
      throw std::invalid_argument("random_pmf_on index out of range");
    }
    mass[indices[k]] = w[k] / sum;
  }
  return Pmf(alphabet, std::move(mass));
}

}  // namespace jsdmix
