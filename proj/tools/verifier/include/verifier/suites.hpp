#ifndef VERIFIER_SUITES_HPP
#define VERIFIER_SUITES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "verifier/config.hpp"

namespace verifier {

struct Counterexample {
  std::string suite;
  long trial = -1;  // -1 for suite-level failures
  std::string check;
  nlohmann::json inputs;
  std::string expected;
  std::string actual;
  nlohmann::json config;
};

struct SuiteReport {
  std::string suite;
  long trials = 0;
  long failures = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_ms = 0;
};

const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

/// Runs `cfg.trials` seeded trials. Trial i depends only on (cfg, seed,
/// suite name, i). Throws UnknownSuite, InvalidConfig, ChiUnavailable.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

struct ReplayResult {
  bool reproduced = false;  // the instance still fails
  std::string check;
  std::string expected;
  std::string actual;
};

/// Re-evaluates the exact inputs stored in a counterexample.
ReplayResult replay(const Counterexample& cex);

nlohmann::json to_json(const Counterexample& c);
Counterexample counterexample_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SuiteReport& r, bool with_timing = true);

}  // namespace verifier

#endif  // VERIFIER_SUITES_HPP
