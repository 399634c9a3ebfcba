#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "jsdmix/alphabet.hpp"

namespace jsdmix {

// Probability weight in [0,1]. Throws std::domain_error outside the range.
class Weight {
 public:
  Weight(double v);  // NOLINT: implicit by design, weights read like numbers

  double value() const { return v_; }
  operator double() const { return v_; }

 private:
  double v_;
};

// Dense PMF over a shared alphabet. Immutable after construction.
// Construction validates nonnegativity and that the mass sums to one
// within 1e-9; use normalized() to rescale unnormalized weights instead.
class Pmf {
 public:
  Pmf(AlphabetPtr alphabet, std::vector<double> mass);
  Pmf(AlphabetPtr alphabet, std::initializer_list<double> mass);

  static Pmf normalized(AlphabetPtr alphabet, std::vector<double> weights);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return mass_.size(); }
  double operator[](std::size_t i) const { return mass_[i]; }
  const std::vector<double>& mass() const { return mass_; }
  const double* data() const { return mass_.data(); }

  friend bool operator==(const Pmf& a, const Pmf& b) {
    return *a.alphabet_ == *b.alphabet_ && a.mass_ == b.mass_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<double> mass_;
};

// Indices with strictly positive mass.
std::vector<std::size_t> support(const Pmf& r);

bool same_alphabet(const Pmf& a, const Pmf& b);

// Entrywise weighted sum. Weights must sum to 1 within 1e-12 and the Pmfs
// must share an alphabet; throws std::invalid_argument otherwise.
Pmf convex_combine(const std::vector<Weight>& weights,
                   const std::vector<Pmf>& pmfs);

}  // namespace jsdmix
