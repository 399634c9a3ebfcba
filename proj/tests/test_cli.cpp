#include <sys/wait.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// runs the installed binary through the shell, capturing both streams
RunResult run_cli(const std::string& args) {
  static std::atomic<int> counter{0};
  const int id = counter++;
  const auto dir = std::filesystem::temp_directory_path();
  const auto out_path = dir / ("jsdmix_cli_out_" + std::to_string(id));
  const auto err_path = dir / ("jsdmix_cli_err_" + std::to_string(id));
  const std::string cmd = std::string(JSDMIX_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

// data rows of a sweep CSV: skips '#' comments, returns header separately
std::vector<std::string> csv_rows(const std::string& text,
                                  std::string* header) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  header->clear();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header->empty()) {
      *header = line;
    } else {
      rows.push_back(line);
    }
  }
  return rows;
}

std::vector<double> split_row(const std::string& row) {
  std::vector<double> cells;
  std::istringstream in(row);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    cells.push_back(std::strtod(cell.c_str(), nullptr));
  }
  return cells;
}

const std::string kDieExample =
    std::string(JSDMIX_DATA_DIR) + "/die_example.json";

}  // namespace

TEST_CASE("help and version exit cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  const RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("1.0.0") != std::string::npos);
}

TEST_CASE("bad invocations exit with the input-error code") {
  CHECK(run_cli("").exit_code == 2);               // missing subcommand
  CHECK(run_cli("line").exit_code == 2);           // missing --fix
  CHECK(run_cli("--bogus sweep").exit_code == 2);  // unknown flag
  CHECK(run_cli("line --fix lambda_3").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("line slice prints a commented CSV") {
  const RunResult r = run_cli("line --fix lambda_1 --resolution 20");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("# scenario: die example, eps=0.3, fixed lambda_1") !=
        std::string::npos);
  CHECK(r.out.find("# kernel: ") != std::string::npos);
  std::string header;
  const std::vector<std::string> rows = csv_rows(r.out, &header);
  CHECK(header == "lambda_1,lambda_2,sjsd_nats");
  REQUIRE(rows.size() == 21);
  for (const std::string& row : rows) {
    const std::vector<double> cells = split_row(row);
    REQUIRE(cells.size() == 3);
    CHECK(cells[0] == 0.3);  // default --at: the scenario's lambda_1
    CHECK(cells[2] >= 0.0);
  }
  CHECK(r.out.back() == '\n');
}

TEST_CASE("diagonal slice varies both proportions together") {
  const RunResult r = run_cli("line --fix diagonal --resolution 10");
  REQUIRE(r.exit_code == 0);
  std::string header;
  for (const std::string& row : csv_rows(r.out, &header)) {
    const std::vector<double> cells = split_row(row);
    CHECK(cells[0] == cells[1]);
  }
}

TEST_CASE("sweep emits the full grid") {
  const RunResult r = run_cli("sweep --resolution 5");
  REQUIRE(r.exit_code == 0);
  std::string header;
  const std::vector<std::string> rows = csv_rows(r.out, &header);
  CHECK(header == "lambda_1,lambda_2,sjsd_nats");
  CHECK(rows.size() == 36);
  CHECK(split_row(rows.front())[2] == 0.0);  // corner (0,0)
}

TEST_CASE("output lands in the --out file when requested") {
  const auto path = std::filesystem::temp_directory_path() /
                    "jsdmix_cli_line.csv";
  const RunResult r =
      run_cli("line --fix lambda_2 --resolution 10 --out " + path.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::string header;
  CHECK(csv_rows(slurp(path), &header).size() == 11);
  std::filesystem::remove(path);

  CHECK(run_cli("sweep --resolution 4 --out /nonexistent/dir/x.csv")
            .exit_code == 2);
}

TEST_CASE("scenario files feed the sweep commands") {
  const RunResult r = run_cli("line --fix lambda_2 --resolution 10 --scenario " +
                              kDieExample);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("die_example.json") != std::string::npos);
  std::string header;
  for (const std::string& row : csv_rows(r.out, &header)) {
    CHECK(split_row(row)[1] == 0.7);  // the file's lambda_2
  }

  CHECK(run_cli("line --fix lambda_1 --scenario /missing.json").exit_code ==
        2);

  const auto bad = std::filesystem::temp_directory_path() /
                   "jsdmix_cli_bad.json";
  std::ofstream(bad) << "{ not json";
  const RunResult broken =
      run_cli("line --fix lambda_1 --scenario " + bad.string());
  CHECK(broken.exit_code == 2);
  CHECK(broken.err.find("error") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("epsilon scan rejects a scenario file") {
  const RunResult ok = run_cli("eps-scan --resolution 10");
  REQUIRE(ok.exit_code == 0);
  std::string header;
  const std::vector<std::string> rows = csv_rows(ok.out, &header);
  CHECK(header == "epsilon,sjsd_nats");
  CHECK(rows.size() == 11);

  const RunResult bad = run_cli("eps-scan --scenario " + kDieExample);
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("does not apply") != std::string::npos);
}

TEST_CASE("delta scan fixes lambda_2") {
  const RunResult r = run_cli("delta-scan --resolution 10 --lambda2 0.5");
  REQUIRE(r.exit_code == 0);
  std::string header;
  const std::vector<std::string> rows = csv_rows(r.out, &header);
  CHECK(header == "lambda_1,lambda_2,sjsd_nats");
  REQUIRE(rows.size() == 11);
  for (const std::string& row : rows) {
    const std::vector<double> cells = split_row(row);
    CHECK(cells[1] == 0.5);
    CHECK(cells[0] <= 0.5);
  }
  CHECK(run_cli("delta-scan --scenario " + kDieExample).exit_code == 2);
}

TEST_CASE("bounds reports the exact JSON key set") {
  const RunResult r = run_cli("bounds");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  std::set<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.insert(it.key());
  CHECK(keys == std::set<std::string>{"js_nats", "lower", "upper", "exact",
                                      "empirical", "stderr", "seed",
                                      "n_trials"});
  CHECK(doc["empirical"].is_null());
  CHECK(doc["stderr"].is_null());
  CHECK(doc["lower"].get<double>() <= doc["exact"].get<double>());
  CHECK(doc["exact"].get<double>() <= doc["upper"].get<double>());
  CHECK(doc["js_nats"].get<double>() > 0.0);
}

TEST_CASE("bounds with simulation fills the empirical fields") {
  const RunResult r = run_cli("bounds --sim --trials 20000 --seed 5");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["empirical"].is_number());
  REQUIRE(doc["stderr"].is_number());
  CHECK(doc["n_trials"].get<std::uint64_t>() == 20000);
  CHECK(doc["seed"].get<std::uint64_t>() == 5);
  CHECK(std::abs(doc["empirical"].get<double>() -
                 doc["exact"].get<double>()) < 0.05);
}

TEST_CASE("bounds accepts proportion overrides") {
  const RunResult r = run_cli("bounds --lambda1 1 --lambda2 0");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["exact"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("urn-sim names its generator and reruns byte-identically") {
  const std::string args = "urn-sim --trials 5000 --seed 9";
  const RunResult a = run_cli(args);
  REQUIRE(a.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc["rng"].get<std::string>() == "mt19937_64");
  CHECK(doc["n_trials"].get<std::uint64_t>() == 5000);
  CHECK(doc["empirical"].is_number());
  CHECK(doc["exact"].is_number());

  const RunResult b = run_cli(args);
  CHECK(a.out == b.out);

  CHECK(run_cli("urn-sim --pi 1.5").exit_code == 2);
  CHECK(run_cli("urn-sim --trials 0").exit_code == 2);
}

TEST_CASE("verify passes on the default configuration") {
  const std::string args = "verify --n-random 25 --seed 42";
  const RunResult a = run_cli(args);
  REQUIRE(a.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc["pass"].get<bool>());
  CHECK(doc["seed"].get<std::uint64_t>() == 42);
  for (const char* key : {"observation_1", "observation_2", "observation_3",
                          "observation_4"}) {
    CHECK(doc.contains(key));
  }

  const RunResult b = run_cli(args);
  CHECK(a.out == b.out);
}
