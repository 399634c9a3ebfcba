#pragma once

#include <cmath>

#include "jsdmix/divergence.hpp"
#include "jsdmix/pmf.hpp"

namespace jsdmix {

// Split of the divergence between two disjoint-component mixtures into a
// proportion part (divergence of the Bernoulli pair (lambda_i, 1-lambda_i))
// and a content part (weighted divergence of the components themselves).
struct DisjointDecomposition {
  double proportion_term;
  double content_term;
  double total;
};

// Two mixtures sharing a base distribution q:
//   p1 = lambda_1 * p_tilde_1 + (1 - lambda_1) * q
//   p2 = lambda_2 * p_tilde_2 + (1 - lambda_2) * q
class MixtureScenario {
 public:
  MixtureScenario(Pmf p_tilde_1, Pmf p_tilde_2, Pmf q, Weight lambda_1,
                  Weight lambda_2);

  const Pmf& p_tilde_1() const { return p_tilde_1_; }
  const Pmf& p_tilde_2() const { return p_tilde_2_; }
  const Pmf& q() const { return q_; }
  double lambda_1() const { return lambda_1_; }
  double lambda_2() const { return lambda_2_; }

  Pmf p1() const;
  Pmf p2() const;
  Pmf midpoint() const;  // (p1 + p2) / 2

  // sym_js(p1, p2)
  double sjsd() const;

  // True iff supp(p_tilde_i) and supp(q) are disjoint for i = 1, 2.
  bool supports_disjoint() const;

  // Requires supports_disjoint(); throws std::domain_error otherwise.
  // The content weight lambda_1/(lambda_1+lambda_2) is taken as 0 when
  // both proportions vanish, making the content term 0.
  DisjointDecomposition disjoint_decomposition() const;

  MixtureScenario with_lambdas(Weight lambda_1, Weight lambda_2) const;

 private:
  Pmf p_tilde_1_;
  Pmf p_tilde_2_;
  Pmf q_;
  double lambda_1_;
  double lambda_2_;
};

// The running die example on {1,...,6}:
//   p_tilde_1 = (1, 0, 0, 0, 0, 0)
//   p_tilde_2 = (1-eps, eps, 0, 0, 0, 0)
//   q         = (0.5, 0.4, 0.025, 0.025, 0.025, 0.025)
class EpsilonFamily {
 public:
  explicit EpsilonFamily(double epsilon);

  double epsilon() const { return epsilon_; }
  MixtureScenario scenario(Weight lambda_1, Weight lambda_2) const;

 private:
  double epsilon_;
};

inline bool decomposition_consistent(const DisjointDecomposition& d,
                                     double direct_sjsd, double tol = 1e-12) {
  const double sum = d.proportion_term + d.content_term;
  return std::abs(d.total - sum) <= tol &&
         std::abs(d.total - direct_sjsd) <= tol;
}

}  // namespace jsdmix
