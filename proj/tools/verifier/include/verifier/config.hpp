#ifndef VERIFIER_CONFIG_HPP
#define VERIFIER_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "metacocycle/rational.hpp"

namespace verifier {

using metacocycle::Rational;

struct RunConfig {
  long p = 3;
  Rational delta = 2;
  std::size_t m = 1;
  std::vector<Rational> gram_V{1};
  std::size_t r = 1;
  long trials = 100;
  std::uint64_t seed = 1;
  std::size_t word_len = 4;
  std::vector<std::string> suites;
  long search_bound = 12;
  // optional extras
  Rational psi_scale = 1;
  std::size_t dump_limit = 10;
};

/// Parses `key = value` lines; '#' starts a comment. Lists are comma
/// separated. Throws Error(InvalidConfig) or Error(ParseError).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Throws Error(InvalidConfig) naming the violated constraint.
void validate(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

/// p in {3, 5, 7}, Delta the smallest positive non-residue, (m, r) in
/// {1, 2, 3} x {1, 2}, gram_V = <1, ..., m>.
std::vector<RunConfig> default_battery(long trials, std::uint64_t seed);

}  // namespace verifier

#endif  // VERIFIER_CONFIG_HPP
