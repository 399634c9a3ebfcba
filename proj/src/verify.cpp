#include "jsdmix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "jsdmix/calculus.hpp"
#include "jsdmix/mixture.hpp"
#include "jsdmix/random.hpp"
#include "jsdmix/sweep.hpp"

namespace jsdmix {
namespace {

using nlohmann::ordered_json;

constexpr double kLn2 = 0.6931471805599453;
constexpr double kSlack = 1e-12;
constexpr double kFdStep = 1e-6;
constexpr double kFdTol = 1e-4;
constexpr int kGridPoints = 200;  // 201 samples per ray / slice
constexpr double kFractions[] = {0.1, 0.25, 0.5, 0.75, 0.9};

// fixed slices of the die example: each must dip strictly below both of
// its endpoints, with the argmin near the expected spot
ordered_json check_example_slices(bool* pass) {
  const EpsilonFamily family(0.3);
  const MixtureScenario base = family.scenario(0.3, 0.7);

  struct Slice {
    const char* name;
    SweepResult sweep;
    const char* axis;
    double expect;
  };
  std::vector<Slice> slices;
  slices.push_back({"min_over_lambda_2",
                    line_eval(base, LineAxis::kLambda1, 0.3, kGridPoints),
                    "lambda_2", 0.5});
  slices.push_back({"min_over_lambda_1",
                    line_eval(base, LineAxis::kLambda2, 0.7, kGridPoints),
                    "lambda_1", 0.3});
  slices.push_back({"min_over_epsilon",
                    epsilon_scan(0.3, 0.7, kGridPoints), "epsilon", 0.2});
  slices.push_back({"min_over_lambda_1_below_lambda_2",
                    delta_scan(0.7, 0.3, kGridPoints), "lambda_1", 0.3});

  ordered_json out;
  bool all = true;
  for (const Slice& s : slices) {
    const MinimizerReport m = find_grid_minimizer(s.sweep, s.axis);
    const double first = s.sweep.records.front().sjsd_nats;
    const double last = s.sweep.records.back().sjsd_nats;
    const bool interior_dip =
        m.grid_min_value < first && m.grid_min_value < last;
    const bool near = std::abs(m.grid_min_location - s.expect) <= 0.05;
    const bool ok = interior_dip && near;
    all = all && ok;
    out[s.name] = ordered_json{{"argmin", m.grid_min_location},
                               {"min_value", m.grid_min_value},
                               {"expected_near", s.expect},
                               {"interior_dip", interior_dip},
                               {"pass", ok}};
  }
  out["pass"] = all;
  *pass = all;
  return out;
}

ordered_json check_ray_monotonicity(std::mt19937_64& g, int n_random,
                                    bool* pass) {
  const AlphabetPtr& faces = six_faces();
  double worst_drop = 0.0;
  double min_derivative = std::numeric_limits<double>::infinity();
  double max_fd_gap = 0.0;
  bool ok = true;

  for (int sc = 0; sc < n_random; ++sc) {
    const Pmf t1 = random_pmf(g, faces);
    const Pmf t2 = random_pmf(g, faces);
    const Pmf q = random_pmf(g, faces);
    const double alpha =
        std::exp(uniform_range(g, std::log(0.1), std::log(10.0)));
    const MixtureScenario s(t1, t2, q, 0.0, 0.0);
    const double lmax = std::min(1.0, 1.0 / alpha);

    auto value_at = [&](double lambda) {
      const double l2 = std::min(alpha * lambda, 1.0);
      return s.with_lambdas(lambda, l2).sjsd();
    };

    double prev = value_at(0.0);
    for (int i = 1; i <= kGridPoints; ++i) {
      const double cur = value_at(lmax * (static_cast<double>(i) /
                                          kGridPoints));
      worst_drop = std::max(worst_drop, prev - cur);
      if (cur < prev - kSlack) ok = false;
      prev = cur;
    }

    for (double f : kFractions) {
      const double lambda = f * lmax;
      const double d = ray_sjsd_derivative(s, RaySpec(alpha, lambda));
      min_derivative = std::min(min_derivative, d);
      if (d < -kSlack) ok = false;
      const double fd = finite_difference(value_at, lambda, kFdStep);
      max_fd_gap = std::max(max_fd_gap, std::abs(d - fd));
      if (std::abs(d - fd) > kFdTol) ok = false;
    }
  }

  *pass = ok;
  return ordered_json{{"scenarios", n_random},
                      {"grid_points", kGridPoints + 1},
                      {"max_grid_drop", worst_drop},
                      {"min_derivative", min_derivative},
                      {"max_fd_gap", max_fd_gap},
                      {"pass", ok}};
}

ordered_json check_delta_monotonicity(std::mt19937_64& g, int n_random,
                                      bool* pass) {
  const AlphabetPtr& faces = six_faces();
  double worst_drop = 0.0;
  double min_derivative = std::numeric_limits<double>::infinity();
  double max_fd_gap = 0.0;
  bool ok = true;

  for (int sc = 0; sc < n_random; ++sc) {
    const Pmf tilde = random_pmf(g, faces);
    const Pmf q = random_pmf(g, faces);
    const double lambda = uniform_range(g, 0.01, 0.99);
    const MixtureScenario s(tilde, tilde, q, 0.0, 0.0);
    const double span = 1.0 - lambda;

    auto value_at = [&](double dl) {
      return s.with_lambdas(lambda, std::min(lambda + dl, 1.0)).sjsd();
    };

    double prev = value_at(0.0);
    for (int i = 1; i <= kGridPoints; ++i) {
      const double cur =
          value_at(span * (static_cast<double>(i) / kGridPoints));
      worst_drop = std::max(worst_drop, prev - cur);
      if (cur < prev - kSlack) ok = false;
      prev = cur;
    }

    for (double f : kFractions) {
      const double dl = f * span;
      const double d = delta_sjsd_derivative(tilde, q, DeltaSpec(lambda, dl));
      min_derivative = std::min(min_derivative, d);
      if (d < -kSlack) ok = false;
      const double fd = finite_difference(value_at, dl, kFdStep);
      max_fd_gap = std::max(max_fd_gap, std::abs(d - fd));
      if (std::abs(d - fd) > kFdTol) ok = false;
    }
  }

  *pass = ok;
  return ordered_json{{"scenarios", n_random},
                      {"grid_points", kGridPoints + 1},
                      {"max_grid_drop", worst_drop},
                      {"min_derivative", min_derivative},
                      {"max_fd_gap", max_fd_gap},
                      {"pass", ok}};
}

ordered_json check_decomposition(std::mt19937_64& g, int n_random,
                                 bool* pass) {
  const AlphabetPtr& faces = six_faces();
  const std::vector<std::size_t> left{0, 1, 2};
  const std::vector<std::size_t> right{3, 4, 5};
  const int n = 10 * n_random;
  double max_identity_gap = 0.0;
  double max_corner_gap = 0.0;
  bool ok = true;

  for (int sc = 0; sc < n; ++sc) {
    const Pmf t1 = random_pmf_on(g, faces, left);
    const Pmf t2 = random_pmf_on(g, faces, left);
    const Pmf q = random_pmf_on(g, faces, right);
    const double l1 = uniform01(g);
    const double l2 = uniform01(g);
    const MixtureScenario s(t1, t2, q, l1, l2);

    const DisjointDecomposition d = s.disjoint_decomposition();
    const double gap = std::abs(d.total - s.sjsd());
    max_identity_gap = std::max(max_identity_gap, gap);
    if (gap >= kSlack) ok = false;

    // corners of the same triple: (1,0) reaches ln 2, equal proportions
    // scale the component divergence linearly
    const double corner =
        std::abs(s.with_lambdas(1.0, 0.0).disjoint_decomposition().total -
                 kLn2);
    const double lam = uniform01(g);
    const double diag =
        std::abs(s.with_lambdas(lam, lam).disjoint_decomposition().total -
                 lam * sym_js(t1, t2));
    max_corner_gap = std::max({max_corner_gap, corner, diag});
    if (corner >= kSlack || diag >= kSlack) ok = false;
  }

  *pass = ok;
  return ordered_json{{"scenarios", n},
                      {"max_identity_gap", max_identity_gap},
                      {"max_corner_gap", max_corner_gap},
                      {"pass", ok}};
}

}  // namespace

VerifyReport verify_observations(std::uint64_t seed, int n_random) {
  std::mt19937_64 g(seed);
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
  bool p4 = false;

  ordered_json report;
  report["observation_1"] = check_example_slices(&p1);
  report["observation_2"] = check_ray_monotonicity(g, n_random, &p2);
  report["observation_3"] = check_delta_monotonicity(g, n_random, &p3);
  report["observation_4"] = check_decomposition(g, n_random, &p4);
  report["seed"] = seed;
  const bool all = p1 && p2 && p3 && p4;
  report["pass"] = all;
  return VerifyReport{std::move(report), all};
}

}  // namespace jsdmix
