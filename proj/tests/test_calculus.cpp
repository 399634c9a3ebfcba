#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "jsdmix/calculus.hpp"
#include "jsdmix/divergence.hpp"
#include "jsdmix/mixture.hpp"
#include "jsdmix/random.hpp"
#include "reference_values.hpp"

using namespace jsdmix;

namespace {

double sjsd_on_ray(const MixtureScenario& s, double alpha, double lambda) {
  return s.with_lambdas(lambda, alpha * lambda).sjsd();
}

MixtureScenario die(double l1, double l2) {
  return EpsilonFamily(0.3).scenario(l1, l2);
}

}  // namespace

TEST_CASE("spec structs validate their domains") {
  CHECK_NOTHROW(RaySpec(2.0, 0.5));
  CHECK_THROWS_AS(RaySpec(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(RaySpec(-1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(RaySpec(2.0, 0.6), std::domain_error);  // alpha*lambda > 1
  CHECK_THROWS_AS(RaySpec(0.5, 1.1), std::domain_error);

  CHECK_NOTHROW(DeltaSpec(0.2, 0.3));
  CHECK_NOTHROW(DeltaSpec(0.2, 0.8));
  CHECK_THROWS_AS(DeltaSpec(0.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(DeltaSpec(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(DeltaSpec(0.2, 0.81), std::domain_error);
  CHECK_THROWS_AS(DeltaSpec(0.2, -0.1), std::domain_error);
}

TEST_CASE("entropy derivative of a constant segment is zero") {
  const Pmf a(indexed_alphabet(3), {0.2, 0.3, 0.5});
  for (double lam : {0.0, 0.25, 0.5, 1.0}) {
    CHECK(entropy_derivative(a, a, lam) == 0.0);
  }
}

TEST_CASE("entropy derivative on the reference segment") {
  const Pmf a(indexed_alphabet(2), {1.0, 0.0});
  const Pmf b(indexed_alphabet(2), {0.5, 0.5});
  const double analytic = entropy_derivative(a, b, 0.5);
  CHECK(analytic ==
        doctest::Approx(refvals::kEntropyDerivSegment).epsilon(1e-14));

  const auto h = [&](double l) { return entropy(Pmf::normalized(
      a.alphabet(), {l * 1.0 + (1.0 - l) * 0.5, (1.0 - l) * 0.5})); };
  CHECK(std::abs(analytic - finite_difference(h, 0.5, 1e-6)) < 1e-6);
}

TEST_CASE("entropy derivative vanishes at the segment's entropy maximum") {
  // the segment (0.9,0.1) -> (0.1,0.9) passes through uniform at its middle,
  // so entropy rises up to lambda = 1/2 and falls afterwards
  const Pmf lo(indexed_alphabet(2), {0.1, 0.9});
  const Pmf hi(indexed_alphabet(2), {0.9, 0.1});
  double left = 0.01, right = 0.99;
  CHECK(entropy_derivative(lo, hi, left) > 0.0);
  CHECK(entropy_derivative(lo, hi, right) < 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (left + right);
    (entropy_derivative(lo, hi, mid) > 0.0 ? left : right) = mid;
  }
  const double stationary = 0.5 * (left + right);
  CHECK(stationary == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(entropy_derivative(lo, hi, stationary)) < 1e-12);
  // finite differences change sign across the stationary point
  const auto h = [&](double l) {
    return entropy(Pmf::normalized(lo.alphabet(),
                                   {l * 0.1 + (1.0 - l) * 0.9,
                                    l * 0.9 + (1.0 - l) * 0.1}));
  };
  CHECK(finite_difference(h, stationary - 0.01, 1e-6) > 0.0);
  CHECK(finite_difference(h, stationary + 0.01, 1e-6) < 0.0);
}

TEST_CASE("entropy derivative rejects unbounded points") {
  const Pmf a(indexed_alphabet(3), {1.0, 0.0, 0.0});
  const Pmf b(indexed_alphabet(3), {0.0, 1.0, 0.0});
  // at lambda = 0 the mixture has r(1) = 0 while a(1) != b(1)
  CHECK_THROWS_AS(entropy_derivative(a, b, 0.0), std::domain_error);
  CHECK_THROWS_AS(entropy_derivative(a, b, 1.0), std::domain_error);
  CHECK_NOTHROW(entropy_derivative(a, b, 0.5));

  const Pmf c(indexed_alphabet(2), {0.5, 0.5});
  CHECK_THROWS_AS(entropy_derivative(a, c, 0.5), std::invalid_argument);
}

TEST_CASE("entropy derivative matches finite differences on random segments") {
  std::mt19937_64 g(31);
  const AlphabetPtr& faces = six_faces();
  for (int t = 0; t < 1000; ++t) {
    const Pmf a = random_pmf(g, faces);
    const Pmf b = random_pmf(g, faces);
    const double lam = uniform_range(g, 0.05, 0.95);
    const auto h = [&](double l) {
      std::vector<double> m(6);
      for (std::size_t i = 0; i < 6; ++i) m[i] = l * a[i] + (1.0 - l) * b[i];
      return entropy(Pmf(faces, std::move(m)));
    };
    const double analytic = entropy_derivative(a, b, lam);
    CHECK(std::abs(analytic - finite_difference(h, lam, 1e-6)) < 1e-4);
  }
}

TEST_CASE("ray derivative is zero when nothing varies") {
  const Pmf q(six_faces(), {0.5, 0.4, 0.025, 0.025, 0.025, 0.025});
  const MixtureScenario flat(q, q, q, 0.5, 0.5);
  for (double lam : {0.1, 0.3, 0.7}) {
    CHECK(ray_sjsd_derivative(flat, RaySpec(1.0, lam)) == 0.0);
  }
}

TEST_CASE("die diagonal derivative is nonnegative") {
  const MixtureScenario s = die(0.3, 0.7);
  for (int i = 1; i <= 9; ++i) {
    const double lam = 0.1 * i;
    CHECK(ray_sjsd_derivative(s, RaySpec(1.0, lam)) >= 0.0);
  }
}

TEST_CASE("die ray derivative matches finite differences") {
  const MixtureScenario s = die(0.3, 0.7);
  const double alpha = 7.0 / 3.0;
  const double analytic = ray_sjsd_derivative(s, RaySpec(alpha, 0.2));
  const auto f = [&](double l) { return sjsd_on_ray(s, alpha, l); };
  CHECK(std::abs(analytic - finite_difference(f, 0.2, 1e-6)) < 1e-5);
}

TEST_CASE("ray derivative rejects boundary points") {
  const MixtureScenario s = die(0.3, 0.7);
  CHECK_THROWS_AS(ray_sjsd_derivative(s, RaySpec(1.0, 0.0)),
                  std::domain_error);
  CHECK_THROWS_AS(ray_sjsd_derivative(s, RaySpec(1.0, 1.0)),
                  std::domain_error);
}

TEST_CASE("ray derivative on random scenarios: sign and accuracy") {
  std::mt19937_64 g(32);
  const AlphabetPtr& faces = six_faces();
  for (int t = 0; t < 200; ++t) {
    const Pmf t1 = random_pmf(g, faces);
    const Pmf t2 = random_pmf(g, faces);
    const Pmf q = random_pmf(g, faces);
    const MixtureScenario s(t1, t2, q, 0.5, 0.5);
    const double alpha = std::exp(uniform_range(g, std::log(0.1),
                                                std::log(10.0)));
    const double lmax = std::min(1.0, 1.0 / alpha);
    for (double frac : {0.1, 0.5, 0.9}) {
      const double lam = frac * lmax;
      const double analytic = ray_sjsd_derivative(s, RaySpec(alpha, lam));
      CHECK(analytic >= -1e-12);
      const auto f = [&](double l) { return sjsd_on_ray(s, alpha, l); };
      CHECK(std::abs(analytic - finite_difference(f, lam, 1e-6)) < 1e-4);
    }
  }
}

TEST_CASE("delta derivative trivial cases") {
  const Pmf t1(six_faces(), {1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  const Pmf q(six_faces(), {0.5, 0.4, 0.025, 0.025, 0.025, 0.025});
  CHECK(delta_sjsd_derivative(t1, q, DeltaSpec(0.2, 0.0)) == 0.0);
  CHECK(delta_sjsd_derivative(q, q, DeltaSpec(0.2, 0.3)) == 0.0);
}

TEST_CASE("delta derivative matches finite differences on the die family") {
  const Pmf t1(six_faces(), {1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  const Pmf q(six_faces(), {0.5, 0.4, 0.025, 0.025, 0.025, 0.025});
  const double analytic = delta_sjsd_derivative(t1, q, DeltaSpec(0.2, 0.3));
  CHECK(analytic > 0.0);
  const MixtureScenario same(t1, t1, q, 0.2, 0.2);
  const auto f = [&](double dl) {
    return same.with_lambdas(0.2, 0.2 + dl).sjsd();
  };
  CHECK(std::abs(analytic - finite_difference(f, 0.3, 1e-6)) < 1e-5);
}

TEST_CASE("delta derivative on random same-component scenarios") {
  std::mt19937_64 g(33);
  const AlphabetPtr& faces = six_faces();
  for (int t = 0; t < 200; ++t) {
    const Pmf p_tilde = random_pmf(g, faces);
    const Pmf q = random_pmf(g, faces);
    const double lam = uniform_range(g, 0.01, 0.9);
    for (double frac : {0.1, 0.5, 0.9}) {
      const double dl = frac * (1.0 - lam);
      const double analytic =
          delta_sjsd_derivative(p_tilde, q, DeltaSpec(lam, dl));
      CHECK(analytic >= -1e-12);
      const MixtureScenario s(p_tilde, p_tilde, q, lam, lam);
      const auto f = [&](double d) {
        return s.with_lambdas(lam, lam + d).sjsd();
      };
      CHECK(std::abs(analytic - finite_difference(f, dl, 1e-6)) < 1e-4);
    }
  }
}

TEST_CASE("rlog convexity check") {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(0.01 + 0.99 * i / 100.0);

  CHECK(check_rlog_convexity(0.0, 1.0, grid));   // f == 0
  CHECK(check_rlog_convexity(1.0, 0.0, grid));   // r ln r
  CHECK(check_rlog_convexity(0.3, 0.5, grid));

  std::vector<double> with_zero{0.0, 0.5, 1.0};
  CHECK(check_rlog_convexity(1.0, 0.0, with_zero));  // 0 ln 0 := 0

  CHECK_THROWS_AS(check_rlog_convexity(0.5, 0.5, {0.1, 0.2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_rlog_convexity(0.5, 0.5, {0.2, 0.1, 0.3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_rlog_convexity(0.5, -1.0, grid), std::domain_error);
  // lambda*r + q == 0 at an interior positive r
  CHECK_THROWS_AS(check_rlog_convexity(0.0, 0.0, {0.1, 0.2, 0.3}),
                  std::domain_error);
}

TEST_CASE("rlog convexity holds on random parameters") {
  std::mt19937_64 g(34);
  for (int t = 0; t < 1000; ++t) {
    const double lam = uniform01(g);
    const double q = uniform_range(g, 1e-6, 1.0);
    std::vector<double> grid;
    const int n = 50;
    for (int i = 0; i <= n; ++i) {
      grid.push_back(static_cast<double>(i) / n);
    }
    CHECK(check_rlog_convexity(lam, q, grid));
  }
}

TEST_CASE("finite difference basics") {
  const auto ident = [](double x) { return x; };
  CHECK(finite_difference(ident, 3.7, 0.25) == doctest::Approx(1.0));
  const auto square = [](double x) { return x * x; };
  CHECK(std::abs(finite_difference(square, 3.0, 1e-5) - 6.0) < 1e-8);
}

TEST_CASE("the two derivative routes agree on the die diagonal") {
  const MixtureScenario s = die(0.3, 0.7);
  const double analytic = ray_sjsd_derivative(s, RaySpec(1.0, 0.5));
  const auto f = [&](double l) { return sjsd_on_ray(s, 1.0, l); };
  CHECK(std::abs(analytic - finite_difference(f, 0.5, 1e-6)) < 1e-5);
}
