#include "jsdmix/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jsdmix/divergence.hpp"
#include "jsdmix/kernels.hpp"
#include "jsdmix/random.hpp"

namespace jsdmix {
namespace {

constexpr double kLn2 = 0.6931471805599453;

// smallest index i with u < cdf[i]; falls back to the last positive-mass
// symbol when roundoff leaves the cdf short of 1
std::size_t draw_symbol(const std::vector<double>& cdf, const Pmf& pmf,
                        double u) {
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    if (u < cdf[i]) return i;
  }
  for (std::size_t i = cdf.size(); i-- > 0;) {
    if (pmf[i] > 0.0) return i;
  }
  return cdf.size() - 1;
}

}  // namespace

ClassificationProblem::ClassificationProblem(Weight pi_in, Pmf r1_in,
                                             Pmf r2_in)
    : pi(pi_in.value()), r1(std::move(r1_in)), r2(std::move(r2_in)) {
  if (!same_alphabet(r1, r2)) {
    throw std::invalid_argument("classification pmfs on different alphabets");
  }
}

double bayes_error_exact(const ClassificationProblem& p) {
  return kernels::active_kernels().min_mix_sum(p.r1.data(), p.r2.data(), p.pi,
                                               1.0 - p.pi, p.r1.size());
}

ErrorBounds js_error_bounds(const ClassificationProblem& p, LogBase base) {
  double h2 = binary_entropy(p.pi);
  double js = js_divergence(p.r1, p.r2, Weight(p.pi));
  if (base == LogBase::kBits) {
    h2 /= kLn2;
    js /= kLn2;
  }
  double gap = h2 - js;
  if (gap < 0.0) gap = 0.0;  // roundoff; mathematically h2 >= js
  return ErrorBounds{0.25 * gap * gap, 0.5 * gap};
}

UrnGameResult simulate_urn_game(const UrnGameConfig& cfg) {
  if (!(cfg.pi >= 0.0 && cfg.pi <= 1.0)) {
    throw std::domain_error("urn prior outside [0,1]");
  }
  if (cfg.n_trials == 0) {
    throw std::invalid_argument("urn game needs at least one trial");
  }
  const Pmf p1 = cfg.scenario.p1();
  const Pmf p2 = cfg.scenario.p2();
  const std::size_t n = p1.size();

  std::vector<double> cdf1(n), cdf2(n);
  std::vector<bool> guess_a(n);
  double c1 = 0.0;
  double c2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c1 += p1[i];
    c2 += p2[i];
    cdf1[i] = c1;
    cdf2[i] = c2;
    // MAP rule, ties toward urn A
    guess_a[i] = cfg.pi * p1[i] >= (1.0 - cfg.pi) * p2[i];
  }

  std::mt19937_64 gen(cfg.seed);
  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < cfg.n_trials; ++t) {
    const bool urn_a = uniform01(gen) < cfg.pi;
    const double u = uniform01(gen);
    const std::size_t x = urn_a ? draw_symbol(cdf1, p1, u)
                                : draw_symbol(cdf2, p2, u);
    if (guess_a[x] != urn_a) ++errors;
  }
  const double err = static_cast<double>(errors) /
                     static_cast<double>(cfg.n_trials);
  const double se =
      std::sqrt(err * (1.0 - err) / static_cast<double>(cfg.n_trials));
  return UrnGameResult{err, se};
}

BoundsReport bounds_report(const ClassificationProblem& p,
                           const std::optional<UrnGameConfig>& sim,
                           LogBase base) {
  BoundsReport r{};
  double js = js_divergence(p.r1, p.r2, Weight(p.pi));
  if (base == LogBase::kBits) js /= kLn2;
  r.js_value = js;
  const ErrorBounds b = js_error_bounds(p, base);
  r.lower_bound = b.lower;
  r.upper_bound = b.upper;
  r.exact_error = bayes_error_exact(p);
  if (sim) {
    const UrnGameResult g = simulate_urn_game(*sim);
    r.empirical_error = g.empirical_error;
    r.empirical_stderr = g.std_error;
  }
  if (r.exact_error < r.lower_bound - 1e-12 ||
      r.exact_error > r.upper_bound + 1e-12) {
    throw BracketingError(
        "divergence bounds fail to bracket the exact error");
  }
  return r;
}

}  // namespace jsdmix
