#pragma once

#include <iosfwd>
#include <string>

#include "jsdmix/mixture.hpp"
#include "jsdmix/sweep.hpp"

namespace jsdmix {

// Scenario JSON schema:
//   {"alphabet": [labels], "p_tilde_1": [...], "p_tilde_2": [...],
//    "q": [...], "lambda_1": x, "lambda_2": y}
// Errors are std::runtime_error and carry the file name plus what was
// wrong (malformed JSON, length mismatch, mass-sum violation, ...).
MixtureScenario load_scenario(const std::string& path);
MixtureScenario scenario_from_json(const std::string& text,
                                   const std::string& origin);

std::string scenario_to_json(const MixtureScenario& s);
void save_scenario(const MixtureScenario& s, const std::string& path);

// CSV with `# key: value` metadata lines, then the header, then one row
// per record. Values carry 17 significant digits, '\n' line ends, no
// locale formatting.
void write_csv(const SweepResult& result, std::ostream& out);
void write_csv_file(const SweepResult& result, const std::string& path);

// 17-significant-digit decimal, enough to round-trip any double exactly.
std::string format_double(double v);

}  // namespace jsdmix
