#include "jsdmix/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "jsdmix/kernels.hpp"
#include "jsdmix/version.hpp"

namespace jsdmix {
namespace {

SweepMetadata metadata_for(std::string scenario, int resolution) {
  return SweepMetadata{std::move(scenario), resolution, kVersion,
                       kernels::active_kernels().name};
}

void require_resolution(int n) {
  if (n < 2) throw std::invalid_argument("resolution must be at least 2");
}

}  // namespace

LineAxis line_axis_from_string(const std::string& name) {
  if (name == "lambda_1") return LineAxis::kLambda1;
  if (name == "lambda_2") return LineAxis::kLambda2;
  if (name == "diagonal") return LineAxis::kDiagonal;
  throw std::invalid_argument("unknown line axis: " + name);
}

SweepResult sweep_grid(const MixtureScenario& triple, int resolution) {
  require_resolution(resolution);
  SweepResult out;
  out.axis_names = {"lambda_1", "lambda_2"};
  out.metadata = metadata_for("grid", resolution);
  const double n = resolution;
  out.records.reserve(static_cast<std::size_t>(resolution + 1) *
                      (resolution + 1));
  for (int i = 0; i <= resolution; ++i) {
    const double l1 = i / n;
    for (int j = 0; j <= resolution; ++j) {
      const double l2 = j / n;
      const double v = triple.with_lambdas(l1, l2).sjsd();
      out.records.push_back(SweepRecord{{l1, l2}, v});
    }
  }
  return out;
}

SweepResult line_eval(const MixtureScenario& triple, LineAxis fixed,
                      double value, int resolution) {
  require_resolution(resolution);
  if (fixed != LineAxis::kDiagonal && !(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error("fixed proportion outside [0,1]");
  }
  SweepResult out;
  out.axis_names = {"lambda_1", "lambda_2"};
  const double n = resolution;
  out.records.reserve(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    const double t = i / n;
    double l1 = t;
    double l2 = t;
    if (fixed == LineAxis::kLambda1) l1 = value;
    if (fixed == LineAxis::kLambda2) l2 = value;
    const double v = triple.with_lambdas(l1, l2).sjsd();
    out.records.push_back(SweepRecord{{l1, l2}, v});
  }
  switch (fixed) {
    case LineAxis::kLambda1:
      out.metadata = metadata_for("line lambda_1 fixed", resolution);
      break;
    case LineAxis::kLambda2:
      out.metadata = metadata_for("line lambda_2 fixed", resolution);
      break;
    case LineAxis::kDiagonal:
      out.metadata = metadata_for("line diagonal", resolution);
      break;
  }
  return out;
}

SweepResult epsilon_scan(Weight lambda_1, Weight lambda_2, int resolution) {
  require_resolution(resolution);
  SweepResult out;
  out.axis_names = {"epsilon"};
  out.metadata = metadata_for("epsilon scan", resolution);
  const double n = resolution;
  out.records.reserve(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    const double eps = i / n;
    const double v =
        EpsilonFamily(eps).scenario(lambda_1, lambda_2).sjsd();
    out.records.push_back(SweepRecord{{eps}, v});
  }
  return out;
}

SweepResult delta_scan(Weight lambda_2, double epsilon, int resolution) {
  require_resolution(resolution);
  const EpsilonFamily family(epsilon);
  SweepResult out;
  out.axis_names = {"lambda_1", "lambda_2"};
  out.metadata = metadata_for("delta scan", resolution);
  const double n = resolution;
  const double l2 = lambda_2.value();
  out.records.reserve(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    const double l1 = l2 * (i / n);
    const double v = family.scenario(l1, l2).sjsd();
    out.records.push_back(SweepRecord{{l1, l2}, v});
  }
  return out;
}

MinimizerReport find_grid_minimizer(const SweepResult& result,
                                    const std::string& free_axis) {
  if (result.records.empty()) {
    throw std::invalid_argument("cannot minimize over an empty sweep");
  }
  const auto it = std::find(result.axis_names.begin(),
                            result.axis_names.end(), free_axis);
  if (it == result.axis_names.end()) {
    throw std::invalid_argument("unknown sweep axis: " + free_axis);
  }
  const std::size_t axis =
      static_cast<std::size_t>(it - result.axis_names.begin());

  std::size_t best = 0;
  for (std::size_t k = 1; k < result.records.size(); ++k) {
    // strict < keeps the earliest (smallest-parameter) record on ties
    if (result.records[k].sjsd_nats < result.records[best].sjsd_nats) {
      best = k;
    }
  }

  MinimizerReport report;
  for (std::size_t a = 0; a < result.axis_names.size(); ++a) {
    if (a == axis) continue;
    report.fixed_params.emplace_back(result.axis_names[a],
                                     result.records[best].params[a]);
  }
  report.free_param = free_axis;
  report.grid_min_location = result.records[best].params[axis];
  report.grid_min_value = result.records[best].sjsd_nats;

  double lo = result.records[0].params[axis];
  double hi = lo;
  for (const SweepRecord& rec : result.records) {
    lo = std::min(lo, rec.params[axis]);
    hi = std::max(hi, rec.params[axis]);
  }
  report.resolution =
      result.metadata.resolution > 0 ? (hi - lo) / result.metadata.resolution
                                     : 0.0;
  return report;
}

}  // namespace jsdmix
