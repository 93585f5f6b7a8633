#include "verifier/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "metacocycle/error.hpp"
#include "metacocycle/local_invariants.hpp"
#include "verifier/suites.hpp"

namespace verifier {

using metacocycle::Error;
using metacocycle::ErrorKind;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long x = std::stol(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidConfig, key + ": expected an integer, got '" + v + "'");
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    if (!v.empty() && v[0] != '-') {
      unsigned long long x = std::stoull(v, &used);
      if (used == v.size()) return x;
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidConfig, key + ": expected an unsigned 64-bit integer, got '" + v + "'");
}

std::size_t parse_size(const std::string& key, const std::string& v) {
  long x = parse_long(key, v);
  if (x < 0) throw Error(ErrorKind::InvalidConfig, key + " must be nonnegative");
  return static_cast<std::size_t>(x);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::stringstream in(text);
  std::string line;
  std::map<std::string, bool> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (seen[key]) throw Error(ErrorKind::InvalidConfig, "duplicate key '" + key + "'");
    seen[key] = true;
    if (key == "p") {
      cfg.p = parse_long(key, v);
    } else if (key == "delta") {
      cfg.delta = metacocycle::parse_rational(v);
    } else if (key == "m") {
      cfg.m = parse_size(key, v);
    } else if (key == "gram_V") {
      cfg.gram_V.clear();
      for (const auto& s : split_list(v)) cfg.gram_V.push_back(metacocycle::parse_rational(s));
    } else if (key == "r") {
      cfg.r = parse_size(key, v);
    } else if (key == "trials") {
      cfg.trials = parse_long(key, v);
    } else if (key == "seed") {
      cfg.seed = parse_u64(key, v);
    } else if (key == "word_len") {
      cfg.word_len = parse_size(key, v);
    } else if (key == "suites") {
      cfg.suites = split_list(v);
    } else if (key == "search_bound") {
      cfg.search_bound = parse_long(key, v);
    } else if (key == "psi_scale") {
      cfg.psi_scale = metacocycle::parse_rational(v);
    } else if (key == "dump_limit") {
      cfg.dump_limit = parse_size(key, v);
    } else {
      throw Error(ErrorKind::InvalidConfig, "unknown key '" + key + "'");
    }
  }
  if (!seen["gram_V"] && seen["m"]) cfg.gram_V.assign(cfg.m, Rational(1));
  if (!seen["m"]) cfg.m = cfg.gram_V.size();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const RunConfig& cfg) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
  if (cfg.p == 2 || !is_prime(cfg.p)) fail("p must be an odd prime");
  if (sgn(cfg.delta) == 0) fail("delta must be nonzero");
  if (cfg.m == 0) fail("m must be at least 1");
  if (cfg.gram_V.size() != cfg.m) fail("gram_V must have exactly m entries");
  for (const auto& a : cfg.gram_V)
    if (sgn(a) == 0) fail("gram_V entries must be nonzero");
  if (cfg.r == 0) fail("r must be at least 1");
  if (cfg.trials < 1) fail("trials must be at least 1");
  if (cfg.word_len == 0) fail("word_len must be at least 1");
  if (cfg.search_bound < 1) fail("search_bound must be at least 1");
  if (sgn(cfg.psi_scale) == 0) fail("psi_scale must be nonzero");
  for (const auto& s : cfg.suites)
    if (!is_known_suite(s)) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + s + "'");
  try {
    metacocycle::LocalContext ctx(cfg.p, cfg.delta, cfg.psi_scale);
  } catch (const Error& e) {
    fail(std::string("delta must be a non-square at p (") + e.what() + ")");
  }
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& a : cfg.gram_V) g.push_back(metacocycle::to_string(a));
  return {{"p", std::to_string(cfg.p)},
          {"delta", metacocycle::to_string(cfg.delta)},
          {"m", std::to_string(cfg.m)},
          {"gram_V", g},
          {"r", std::to_string(cfg.r)},
          {"trials", std::to_string(cfg.trials)},
          {"seed", std::to_string(cfg.seed)},
          {"word_len", std::to_string(cfg.word_len)},
          {"suites", cfg.suites},
          {"search_bound", std::to_string(cfg.search_bound)},
          {"psi_scale", metacocycle::to_string(cfg.psi_scale)},
          {"dump_limit", std::to_string(cfg.dump_limit)}};
}

RunConfig config_from_json(const nlohmann::json& j) {
  try {
    RunConfig cfg;
    cfg.p = parse_long("p", j.at("p").get<std::string>());
    cfg.delta = metacocycle::parse_rational(j.at("delta").get<std::string>());
    cfg.m = parse_size("m", j.at("m").get<std::string>());
    cfg.gram_V.clear();
    for (const auto& a : j.at("gram_V")) cfg.gram_V.push_back(metacocycle::parse_rational(a.get<std::string>()));
    cfg.r = parse_size("r", j.at("r").get<std::string>());
    cfg.trials = parse_long("trials", j.at("trials").get<std::string>());
    cfg.seed = parse_u64("seed", j.at("seed").get<std::string>());
    cfg.word_len = parse_size("word_len", j.at("word_len").get<std::string>());
    cfg.suites = j.at("suites").get<std::vector<std::string>>();
    cfg.search_bound = parse_long("search_bound", j.at("search_bound").get<std::string>());
    if (j.contains("psi_scale")) cfg.psi_scale = metacocycle::parse_rational(j["psi_scale"].get<std::string>());
    if (j.contains("dump_limit")) cfg.dump_limit = parse_size("dump_limit", j["dump_limit"].get<std::string>());
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("malformed config object: ") + e.what());
  }
}

std::vector<RunConfig> default_battery(long trials, std::uint64_t seed) {
  std::vector<RunConfig> out;
  for (long p : {3L, 5L, 7L}) {
    const metacocycle::LocalContext probe(p, p == 7 ? 3 : 2);
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t r = 1; r <= 2; ++r) {
        RunConfig c;
        c.p = p;
        c.delta = Rational(probe.nonresidue());
        c.m = m;
        c.gram_V.clear();
        for (std::size_t k = 1; k <= m; ++k) c.gram_V.push_back(Rational(static_cast<long>(k)));
        c.r = r;
        c.trials = trials;
        c.seed = seed;
        c.suites = suite_names();
        out.push_back(std::move(c));
      }
  }
  return out;
}

}  // namespace verifier
