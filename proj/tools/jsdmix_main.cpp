// Experiment front end: sweeps and slices of the mixture divergence
// surface, error-bound reports, the urn guessing game, and the aggregate
// verification suite. Data goes to --out (or stdout), diagnostics to
// stderr. Exit codes: 0 ok, 1 verification/bracketing failure, 2 bad
// input.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jsdmix/bounds.hpp"
#include "jsdmix/mixture.hpp"
#include "jsdmix/random.hpp"
#include "jsdmix/scenario_io.hpp"
#include "jsdmix/sweep.hpp"
#include "jsdmix/verify.hpp"
#include "jsdmix/version.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  std::string scenario_path;
  double epsilon = 0.3;
  int resolution = 200;
  std::uint64_t seed = 42;
  std::string out_path;
};

std::string short_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_output(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out_path, std::ios::binary);
  if (!out) throw std::runtime_error(g.out_path + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(g.out_path + ": write failed");
}

void write_sweep(const GlobalOpts& g, const jsdmix::SweepResult& result) {
  std::ostringstream buf;
  jsdmix::write_csv(result, buf);
  write_output(g, buf.str());
}

// file scenario when given, otherwise the die example at the running
// proportions (0.3, 0.7)
jsdmix::MixtureScenario make_scenario(const GlobalOpts& g) {
  if (!g.scenario_path.empty()) return jsdmix::load_scenario(g.scenario_path);
  return jsdmix::EpsilonFamily(g.epsilon).scenario(0.3, 0.7);
}

std::string describe_scenario(const GlobalOpts& g) {
  if (!g.scenario_path.empty()) return g.scenario_path;
  return "die example, eps=" + short_double(g.epsilon);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jensen-Shannon divergence experiments on two-component "
               "mixtures"};
  app.set_version_flag("--version", jsdmix::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--scenario", g.scenario_path,
                 "scenario JSON file (default: built-in die example)");
  app.add_option("--epsilon", g.epsilon,
                 "die-example epsilon when no scenario file is given")
      ->capture_default_str();
  app.add_option("--resolution", g.resolution, "grid subdivisions per axis")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for all randomized commands")
      ->capture_default_str();
  app.add_option("--out", g.out_path, "output file (default: stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "full (lambda_1, lambda_2) grid of sjsd values");

  CLI::App* line = app.add_subcommand(
      "line", "1-D slice with one proportion fixed, or the diagonal");
  std::string fix_axis;
  double at_value = 0.0;
  line->add_option("--fix", fix_axis, "lambda_1, lambda_2 or diagonal")
      ->required();
  CLI::Option* at_opt = line->add_option(
      "--at", at_value,
      "value of the fixed proportion (default: the scenario's)");

  CLI::App* eps_scan = app.add_subcommand(
      "eps-scan", "die-example sjsd as a function of epsilon");
  double scan_l1 = 0.3;
  double scan_l2 = 0.7;
  eps_scan->add_option("--lambda1", scan_l1, "fixed lambda_1")
      ->capture_default_str();
  eps_scan->add_option("--lambda2", scan_l2, "fixed lambda_2")
      ->capture_default_str();

  CLI::App* delta_scan_cmd = app.add_subcommand(
      "delta-scan", "die-example slice lambda_1 in [0, lambda_2]");
  double delta_l2 = 0.7;
  delta_scan_cmd->add_option("--lambda2", delta_l2, "fixed lambda_2")
      ->capture_default_str();

  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "divergence bounds on the Bayes error of the urn game");
  double pi = 0.5;
  std::uint64_t trials = 1000000;
  bool with_sim = false;
  double override_l1 = 0.0;
  double override_l2 = 0.0;
  bounds_cmd->add_option("--pi", pi, "prior probability of urn A")
      ->capture_default_str();
  bounds_cmd->add_flag("--sim", with_sim, "also run the Monte Carlo game");
  bounds_cmd->add_option("--trials", trials, "Monte Carlo trials")
      ->capture_default_str();
  CLI::Option* l1_opt = bounds_cmd->add_option(
      "--lambda1", override_l1, "override the scenario's lambda_1");
  CLI::Option* l2_opt = bounds_cmd->add_option(
      "--lambda2", override_l2, "override the scenario's lambda_2");

  CLI::App* urn = app.add_subcommand(
      "urn-sim", "seeded Monte Carlo run of the urn guessing game");
  double urn_pi = 0.5;
  std::uint64_t urn_trials = 1000000;
  urn->add_option("--pi", urn_pi, "prior probability of urn A")
      ->capture_default_str();
  urn->add_option("--trials", urn_trials, "Monte Carlo trials")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full observation verification suite");
  int n_random = 1000;
  verify->add_option("--n-random", n_random,
                     "randomized scenarios per property")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return 2;
  }

  try {
    if (*sweep) {
      jsdmix::SweepResult result =
          jsdmix::sweep_grid(make_scenario(g), g.resolution);
      result.metadata.scenario = describe_scenario(g);
      write_sweep(g, result);
    } else if (*line) {
      const jsdmix::LineAxis axis = jsdmix::line_axis_from_string(fix_axis);
      const jsdmix::MixtureScenario s = make_scenario(g);
      double value = at_value;
      if (at_opt->count() == 0 && axis != jsdmix::LineAxis::kDiagonal) {
        value = axis == jsdmix::LineAxis::kLambda1 ? s.lambda_1()
                                                   : s.lambda_2();
      }
      jsdmix::SweepResult result =
          jsdmix::line_eval(s, axis, value, g.resolution);
      result.metadata.scenario = describe_scenario(g) + ", fixed " + fix_axis;
      write_sweep(g, result);
    } else if (*eps_scan) {
      if (!g.scenario_path.empty()) {
        throw std::runtime_error(
            "eps-scan varies the built-in die example; --scenario does not "
            "apply");
      }
      jsdmix::SweepResult result =
          jsdmix::epsilon_scan(scan_l1, scan_l2, g.resolution);
      result.metadata.scenario =
          "die example, lambda_1=" + short_double(scan_l1) +
          ", lambda_2=" + short_double(scan_l2);
      write_sweep(g, result);
    } else if (*delta_scan_cmd) {
      if (!g.scenario_path.empty()) {
        throw std::runtime_error(
            "delta-scan varies the built-in die example; --scenario does "
            "not apply");
      }
      jsdmix::SweepResult result =
          jsdmix::delta_scan(delta_l2, g.epsilon, g.resolution);
      result.metadata.scenario = "die example, eps=" +
                                 short_double(g.epsilon) +
                                 ", lambda_2=" +
                                 short_double(delta_l2);
      write_sweep(g, result);
    } else if (*bounds_cmd) {
      jsdmix::MixtureScenario s = make_scenario(g);
      const double l1 = l1_opt->count() ? override_l1 : s.lambda_1();
      const double l2 = l2_opt->count() ? override_l2 : s.lambda_2();
      s = s.with_lambdas(l1, l2);
      const jsdmix::ClassificationProblem problem(pi, s.p1(), s.p2());
      std::optional<jsdmix::UrnGameConfig> sim;
      if (with_sim) sim = jsdmix::UrnGameConfig{s, pi, trials, g.seed};
      const jsdmix::BoundsReport r = jsdmix::bounds_report(problem, sim);
      const double js_nats =
          jsdmix::js_divergence(problem.r1, problem.r2, pi);
      ordered_json doc{{"js_nats", js_nats},
                       {"lower", r.lower_bound},
                       {"upper", r.upper_bound},
                       {"exact", r.exact_error},
                       {"empirical", nullptr},
                       {"stderr", nullptr},
                       {"seed", g.seed},
                       {"n_trials", trials}};
      if (r.empirical_error) doc["empirical"] = *r.empirical_error;
      if (r.empirical_stderr) doc["stderr"] = *r.empirical_stderr;
      write_output(g, doc.dump(2) + "\n");
    } else if (*urn) {
      const jsdmix::MixtureScenario s = make_scenario(g);
      const jsdmix::UrnGameConfig cfg{s, urn_pi, urn_trials, g.seed};
      const jsdmix::UrnGameResult r = jsdmix::simulate_urn_game(cfg);
      const jsdmix::ClassificationProblem problem(urn_pi, s.p1(), s.p2());
      ordered_json doc{{"empirical", r.empirical_error},
                       {"stderr", r.std_error},
                       {"exact", jsdmix::bayes_error_exact(problem)},
                       {"pi", urn_pi},
                       {"seed", g.seed},
                       {"n_trials", urn_trials},
                       {"rng", jsdmix::kRngName}};
      write_output(g, doc.dump(2) + "\n");
    } else if (*verify) {
      const jsdmix::VerifyReport report =
          jsdmix::verify_observations(g.seed, n_random);
      write_output(g, report.detail.dump(2) + "\n");
      if (!report.pass) {
        std::cerr << "verification failed\n";
        return 1;
      }
    }
  } catch (const jsdmix::BracketingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
