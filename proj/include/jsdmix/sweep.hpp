#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jsdmix/mixture.hpp"

namespace jsdmix {

struct SweepRecord {
  std::vector<double> params;  // one value per axis
  double sjsd_nats;
};

struct SweepMetadata {
  std::string scenario;
  int resolution;
  std::string tool_version;
  std::string kernel;
};

// Grid or line of divergence evaluations, row-major by the first axis.
struct SweepResult {
  std::vector<std::string> axis_names;
  std::vector<SweepRecord> records;
  SweepMetadata metadata;
};

enum class LineAxis { kLambda1, kLambda2, kDiagonal };

// Accepts "lambda_1", "lambda_2", "diagonal"; throws std::invalid_argument
// otherwise.
LineAxis line_axis_from_string(const std::string& name);

// sjsd over the uniform (n+1) x (n+1) grid on [0,1]^2, lambda_1 as the
// outer (row) axis. Requires n >= 2.
SweepResult sweep_grid(const MixtureScenario& triple, int resolution);

// 1-D slice: one proportion fixed at `value`, the other swept over [0,1];
// for the diagonal, both run together and `value` is ignored.
SweepResult line_eval(const MixtureScenario& triple, LineAxis fixed,
                      double value, int resolution);

// sjsd of the epsilon family at fixed proportions, epsilon on [0,1].
SweepResult epsilon_scan(Weight lambda_1, Weight lambda_2, int resolution);

// lambda_1 swept over [0, lambda_2] with lambda_2 fixed, epsilon family.
SweepResult delta_scan(Weight lambda_2, double epsilon, int resolution);

struct MinimizerReport {
  std::vector<std::pair<std::string, double>> fixed_params;
  std::string free_param;
  double grid_min_location;
  double grid_min_value;
  double resolution;  // grid step along the free axis
};

// Grid argmin of sjsd; ties go to the earliest record in row-major order,
// i.e. the smallest parameter values. Throws std::invalid_argument when
// the sweep is empty or the axis name is unknown.
MinimizerReport find_grid_minimizer(const SweepResult& result,
                                    const std::string& free_axis);

}  // namespace jsdmix
