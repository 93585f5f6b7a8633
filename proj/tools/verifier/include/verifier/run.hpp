#ifndef VERIFIER_RUN_HPP
#define VERIFIER_RUN_HPP

#include <vector>

#include <json.hpp>

#include "verifier/suites.hpp"

namespace verifier {

struct RunResult {
  std::vector<SuiteReport> suites;
  bool passed() const;
  long failures() const;
};

/// Runs cfg.suites (all suites when empty) in order.
RunResult run(const RunConfig& cfg);

/// {"config": ..., "psi_scale": ..., "leray_convention": ..., "suites": [SuiteReport...]}
nlohmann::json report_document(const RunConfig& cfg, const RunResult& result, bool with_timing = true);

/// Re-runs the Leray calibration and compares with the frozen convention.
/// Throws Error(CalibrationMismatch).
void check_calibration();

}  // namespace verifier

#endif  // VERIFIER_RUN_HPP
