#include "verifier/run.hpp"

#include "metacocycle/cocycle.hpp"
#include "metacocycle/error.hpp"

namespace verifier {

bool RunResult::passed() const { return failures() == 0; }

long RunResult::failures() const {
  long n = 0;
  for (const auto& s : suites) n += s.failures;
  return n;
}

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  RunResult out;
  for (const auto& name : cfg.suites.empty() ? suite_names() : cfg.suites) out.suites.push_back(run_suite(name, cfg));
  return out;
}

nlohmann::json report_document(const RunConfig& cfg, const RunResult& result, bool with_timing) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : result.suites) suites.push_back(to_json(s, with_timing));
  return {{"config", to_json(cfg)},
          {"psi_scale", metacocycle::to_string(cfg.psi_scale)},
          {"leray_convention", metacocycle::kLerayConvention.name()},
          {"suites", suites}};
}

void check_calibration() {
  const metacocycle::LerayCalibration cal = metacocycle::calibrate_leray();
  if (!(cal.selected == metacocycle::kLerayConvention)) {
    throw metacocycle::Error(metacocycle::ErrorKind::CalibrationMismatch,
                             "calibration selected " + cal.selected.name() + " but the frozen convention is " +
                                 metacocycle::kLerayConvention.name());
  }
}

}  // namespace verifier
