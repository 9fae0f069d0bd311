#include "vmr/config.hpp"

#include <charconv>
#include <sstream>
#include <unordered_set>

namespace vmr {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& key, int line,
                       const std::string& what) {
  throw ConfigError("config: key '" + key + "' (line " + std::to_string(line) +
                    "): " + what);
}

double as_double(const std::string& key, int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    fail(key, line, "expected a number, got '" + v + "'");
  }
}

long as_long(const std::string& key, int line, const std::string& v) {
  long out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    fail(key, line, "expected an integer, got '" + v + "'");
  return out;
}

}  // namespace

ScenarioConfig RunConfig::make_scenario() const {
  return scenario == ScenarioKind::Cylinder
             ? ScenarioConfig::cylinder()
             : ScenarioConfig::two_stream(alpha, k0, vmax);
}

StepperOptions RunConfig::make_options() const {
  StepperOptions opt;
  opt.order_n = order_n;
  opt.eval_depth = eval_depth;
  opt.splitting = splitting;
  return opt;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::unordered_set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(line) +
                        ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string val = trim(stripped.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("config: line " + std::to_string(line) +
                        ": expected 'key = value'");
    if (!seen.insert(key).second) fail(key, line, "duplicate key");

    if (key == "scenario") {
      if (val == "cylinder")
        cfg.scenario = ScenarioKind::Cylinder;
      else if (val == "two_stream")
        cfg.scenario = ScenarioKind::TwoStream;
      else
        fail(key, line, "expected 'cylinder' or 'two_stream'");
    } else if (key == "j0") {
      cfg.j0 = int(as_long(key, line, val));
    } else if (key == "j1") {
      cfg.j1 = int(as_long(key, line, val));
    } else if (key == "order_n") {
      cfg.order_n = int(as_long(key, line, val));
      if (cfg.order_n < 0 || cfg.order_n > 3)
        fail(key, line, "order_n must be in {0,1,2,3}");
    } else if (key == "dt") {
      cfg.dt = as_double(key, line, val);
      if (cfg.dt <= 0.0) fail(key, line, "dt must be > 0");
    } else if (key == "steps") {
      cfg.steps = as_long(key, line, val);
      if (cfg.steps < 0) fail(key, line, "steps must be >= 0");
    } else if (key == "eps") {
      cfg.eps = as_double(key, line, val);
      if (*cfg.eps < 0.0) fail(key, line, "eps must be >= 0");
    } else if (key == "splitting") {
      if (val == "lie")
        cfg.splitting = Splitting::Lie;
      else if (val == "strang")
        cfg.splitting = Splitting::Strang;
      else
        fail(key, line, "expected 'lie' or 'strang'");
    } else if (key == "out_dir") {
      cfg.out_dir = val;
    } else if (key == "diag_every") {
      cfg.diag_every = as_long(key, line, val);
      if (cfg.diag_every < 0) fail(key, line, "diag_every must be >= 0");
    } else if (key == "snapshot_every") {
      cfg.snapshot_every = as_long(key, line, val);
      if (cfg.snapshot_every < 0) fail(key, line, "snapshot_every must be >= 0");
    } else if (key == "alpha") {
      cfg.alpha = as_double(key, line, val);
    } else if (key == "k0") {
      cfg.k0 = as_double(key, line, val);
      if (cfg.k0 <= 0.0) fail(key, line, "k0 must be > 0");
    } else if (key == "vmax") {
      cfg.vmax = as_double(key, line, val);
      if (cfg.vmax <= 0.0) fail(key, line, "vmax must be > 0");
    } else if (key == "eval_depth") {
      cfg.eval_depth = int(as_long(key, line, val));
      if (cfg.eval_depth < 1 || cfg.eval_depth > 20)
        fail(key, line, "eval_depth must be in [1, 20]");
    } else {
      fail(key, line, "unknown key");
    }
  }
  for (const char* req : {"scenario", "j0", "j1", "dt", "steps"})
    if (!seen.count(req))
      throw ConfigError(std::string("config: missing required key '") + req +
                        "'");
  if (cfg.j0 < 1 || cfg.j1 > 20)
    throw ConfigError("config: levels must satisfy 1 <= j0 and j1 <= 20");
  if (cfg.j0 >= cfg.j1)
    throw ConfigError("config: requires j0 < j1, got j0 = " +
                      std::to_string(cfg.j0) + ", j1 = " +
                      std::to_string(cfg.j1));
  return cfg;
}

}  // namespace vmr
