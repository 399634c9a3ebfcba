#include "jsdmix/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jsdmix/kernels.hpp"

namespace jsdmix {
namespace {

std::vector<double> mix_raw(const Pmf& a, const Pmf& b, double w) {
  std::vector<double> out(a.size());
  kernels::active_kernels().mix2(a.data(), b.data(), w, 1.0 - w, out.data(),
                                 a.size());
  return out;
}

// -sum d(x) (1 + ln r(x)); throws where the derivative is unbounded.
double directional(const std::vector<double>& d, const std::vector<double>& r) {
  bool defined = false;
  const double v = kernels::active_kernels().entropy_directional(
      d.data(), r.data(), d.size(), &defined);
  if (!defined) {
    throw std::domain_error(
        "entropy derivative unbounded: moving mass across a zero of the "
        "distribution");
  }
  return v;
}

}  // namespace

RaySpec::RaySpec(double a, double l) : alpha(a), lambda(l) {
  if (!(alpha > 0.0)) throw std::domain_error("ray slope must be positive");
  if (!(lambda >= 0.0 && lambda <= 1.0 && alpha * lambda <= 1.0)) {
    throw std::domain_error("ray point leaves the unit square");
  }
}

DeltaSpec::DeltaSpec(double l, double dl) : lambda_min(l), delta_lambda(dl) {
  if (!(lambda_min > 0.0 && lambda_min < 1.0)) {
    throw std::domain_error("lambda_min must lie strictly inside (0,1)");
  }
  if (!(delta_lambda >= 0.0 && delta_lambda <= 1.0 - lambda_min)) {
    throw std::domain_error("delta_lambda outside [0, 1 - lambda_min]");
  }
}

double entropy_derivative(const Pmf& a, const Pmf& b, Weight lambda) {
  if (!same_alphabet(a, b)) {
    throw std::invalid_argument("entropy_derivative: alphabets differ");
  }
  const std::size_t n = a.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - b[i];
  return directional(d, mix_raw(a, b, lambda.value()));
}

double ray_sjsd_derivative(const MixtureScenario& s, const RaySpec& ray) {
  const double l1 = ray.lambda;
  const double l2 = ray.alpha * ray.lambda;
  if (!(l1 > 0.0 && l1 < 1.0 && l2 < 1.0)) {
    throw std::domain_error("ray derivative needs an interior point");
  }
  const Pmf& t1 = s.p_tilde_1();
  const Pmf& t2 = s.p_tilde_2();
  const Pmf& q = s.q();
  const std::size_t n = q.size();

  const std::vector<double> p1 = mix_raw(t1, q, l1);
  const std::vector<double> p2 = mix_raw(t2, q, l2);
  std::vector<double> pm(n), d1(n), d2(n), dm(n);
  for (std::size_t i = 0; i < n; ++i) {
    pm[i] = 0.5 * p1[i] + 0.5 * p2[i];
    d1[i] = t1[i] - q[i];
    d2[i] = ray.alpha * (t2[i] - q[i]);
    dm[i] = 0.5 * (d1[i] + d2[i]);
  }
  return directional(dm, pm) - 0.5 * directional(d1, p1) -
         0.5 * directional(d2, p2);
}

double delta_sjsd_derivative(const Pmf& p_tilde, const Pmf& q,
                             const DeltaSpec& spec) {
  if (!same_alphabet(p_tilde, q)) {
    throw std::invalid_argument("delta_sjsd_derivative: alphabets differ");
  }
  // midpoint mixture at proportion lambda + delta/2
  const double mid = spec.lambda_min + 0.5 * spec.delta_lambda;
  const std::vector<double> pm = mix_raw(p_tilde, q, mid);
  double acc = 0.0;
  for (std::size_t i = 0; i < p_tilde.size(); ++i) {
    const double diff = p_tilde[i] - q[i];
    if (diff == 0.0) continue;
    if (!(pm[i] > 0.0)) {
      throw std::domain_error(
          "delta derivative unbounded: midpoint mixture has a zero where "
          "the components differ");
    }
    acc += 0.5 * diff * std::log1p(0.5 * spec.delta_lambda * diff / pm[i]);
  }
  return acc;
}

bool check_rlog_convexity(Weight lambda, double q_val,
                          const std::vector<double>& r_grid) {
  if (r_grid.size() < 3) {
    throw std::invalid_argument("convexity check needs at least 3 points");
  }
  if (!(q_val >= 0.0)) {
    throw std::domain_error("q_val must be nonnegative");
  }
  const double lam = lambda.value();
  std::vector<double> f(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    if (i > 0 && !(r > r_grid[i - 1])) {
      throw std::invalid_argument("grid must be strictly ascending");
    }
    if (!(r >= 0.0)) throw std::domain_error("grid values must be >= 0");
    const double arg = lam * r + q_val;
    if (arg > 0.0) {
      f[i] = r * std::log(arg);
    } else if (r == 0.0) {
      f[i] = 0.0;  // r ln(lambda r) -> 0 as r -> 0
    } else {
      throw std::domain_error("log argument vanishes at a positive r");
    }
  }
  double prev_slope = (f[1] - f[0]) / (r_grid[1] - r_grid[0]);
  for (std::size_t i = 2; i < r_grid.size(); ++i) {
    const double slope = (f[i] - f[i - 1]) / (r_grid[i] - r_grid[i - 1]);
    if (slope - prev_slope < -1e-12) return false;
    prev_slope = slope;
  }
  return true;
}

}  // namespace jsdmix
