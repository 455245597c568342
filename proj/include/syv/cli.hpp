#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace syv {

// Invalid configuration; reported as a usage error.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One verification run. Unset parameters take per-check defaults (the
// instances of the acceptance suite).
struct VerifyConfig {
  std::vector<std::string> checks;
  std::optional<int> m, n;
  std::optional<std::vector<int>> u, q;
  std::optional<int> s;
  int degree = 2;
  std::vector<std::string> variants;
  int jobs = 1;
  // main-theorem only: 0 = full basis, otherwise a deterministic sample.
  size_t sample = 0;
  // Adds wall times to the report (which is then no longer byte-stable).
  bool timings = false;

  static VerifyConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

const std::vector<std::string>& check_names();
const std::vector<std::string>& variant_names();

// Expands "all", rejects unknown names and configurations outside a check's
// hypotheses. Throws ConfigError.
VerifyConfig validate(VerifyConfig cfg);

struct CheckRecord {
  std::string name;
  nlohmann::json parameters;
  std::string status;  // pass, fail, skipped
  // First failure: label, basis vector, both evaluations.
  std::optional<nlohmann::json> counterexample;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double wall_s = 0;

  bool pass() const { return status == "pass"; }
  nlohmann::json to_json(bool timings) const;
};

// Runs one check of a validated configuration.
CheckRecord run_check(const std::string& name, const VerifyConfig& cfg);

struct RunResult {
  nlohmann::json report;
  bool pass = true;
};

// Runs every selected check in order; throws ConfigError on invalid input.
RunResult run(const VerifyConfig& cfg);

}  // namespace syv
