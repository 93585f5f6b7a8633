#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "metacocycle/error.hpp"
#include "verifier/run.hpp"

namespace fs = std::filesystem;
using metacocycle::Error;
using metacocycle::ErrorKind;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConfig:
    case ErrorKind::UnknownSuite:
    case ErrorKind::ParseError:
    case ErrorKind::ChiUnavailable:
      return kUsage;
    default:
      return kInternal;
  }
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const fs::path& path, const nlohmann::json& doc) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidConfig, "cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

int do_replay(const std::string& path) {
  const auto cex = verifier::counterexample_from_json(read_json(path));
  const auto r = verifier::replay(cex);
  if (r.reproduced) {
    std::cout << cex.suite << ": reproduced failure of '" << r.check << "' (expected " << r.expected << ", actual "
              << r.actual << ")\n";
    return kFail;
  }
  std::cout << cex.suite << ": instance passes ('" << r.check << "')\n";
  return kPass;
}

int do_run(const std::string& config_path, const std::vector<std::string>& suites, std::optional<std::uint64_t> seed,
           std::optional<long> trials, const std::string& report_path) {
  verifier::RunConfig cfg = verifier::load_config(config_path);
  if (!suites.empty()) cfg.suites = suites;
  if (seed) cfg.seed = *seed;
  if (trials) cfg.trials = *trials;
  verifier::validate(cfg);
  verifier::check_calibration();

  const auto result = verifier::run(cfg);
  for (const auto& s : result.suites) {
    std::cout << (s.failures == 0 ? "PASS " : "FAIL ") << s.suite << "  trials=" << s.trials
              << " failures=" << s.failures << " (" << static_cast<long>(s.elapsed_ms) << " ms)\n";
  }

  const fs::path report = report_path.empty() ? fs::path() : fs::path(report_path);
  if (!report.empty()) write_file(report, verifier::report_document(cfg, result));
  const fs::path dump_dir =
      report.empty() ? fs::path("counterexamples") : report.parent_path() / (report.stem().string() + ".cex");
  for (const auto& s : result.suites)
    for (const auto& c : s.counterexamples) {
      const fs::path file = dump_dir / (c.suite + "-" + (c.trial < 0 ? "suite" : std::to_string(c.trial)) + ".json");
      write_file(file, verifier::to_json(c));
      std::cout << "  counterexample: " << file.string() << '\n';
    }
  return result.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the similitude dual pair cocycle identities"};
  std::string config_path, replay_path, report_path;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<long> trials;
  app.add_option("--config", config_path, "Key-value run configuration");
  app.add_option("--suite", suites, "Suite to run (repeatable; default: config or all)");
  app.add_option("--seed", seed, "Override the configured seed");
  app.add_option("--trials", trials, "Override trials per suite");
  app.add_option("--replay", replay_path, "Re-evaluate a dumped counterexample");
  app.add_option("--report", report_path, "Write the JSON report here");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!replay_path.empty()) return do_replay(replay_path);
    if (config_path.empty()) {
      std::cerr << "error: --config is required\n" << app.help();
      return kUsage;
    }
    return do_run(config_path, suites, seed, trials, report_path);
  } catch (const Error& e) {
    std::cerr << "error [" << metacocycle::to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
