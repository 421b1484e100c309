// Copyright 2026 The Slider Docking Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "docking/scenario_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "docking/errors.hpp"

namespace docking {
namespace {

struct Field {
  const char* key;
  double ScenarioConfig::*top = nullptr;
  double* (*resolve)(ScenarioConfig&) = nullptr;
};

#define DOCKING_SUB(key, expr) \
  Field { key, nullptr, [](ScenarioConfig& c) -> double* { return &(c.expr); } }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      DOCKING_SUB("r_x", initial_state.r_x),
      DOCKING_SUB("r_y", initial_state.r_y),
      DOCKING_SUB("theta", initial_state.theta),
      DOCKING_SUB("v_x", initial_state.v_x),
      DOCKING_SUB("v_y", initial_state.v_y),
      DOCKING_SUB("omega_z", initial_state.omega_z),
      DOCKING_SUB("mass", rigid_body.mass),
      DOCKING_SUB("inertia_zz", rigid_body.inertia_zz),
      DOCKING_SUB("cardioid_a", safety.cardioid_a),
      DOCKING_SUB("theta_v", vision.theta_v),
      DOCKING_SUB("theta_v_bar", vision.theta_v_bar),
      DOCKING_SUB("epsilon_dock", vision.epsilon_dock),
      DOCKING_SUB("k1", barrier_gains.k1),
      DOCKING_SUB("k2", barrier_gains.k2),
      DOCKING_SUB("k3", barrier_gains.k3),
      DOCKING_SUB("p1", nominal_gains.p1),
      DOCKING_SUB("p2", nominal_gains.p2),
      DOCKING_SUB("p3", nominal_gains.p3),
      DOCKING_SUB("c1", inner_gains.c1),
      DOCKING_SUB("c2", inner_gains.c2),
      DOCKING_SUB("c3", inner_gains.c3),
      DOCKING_SUB("lin_bound", input_bounds.lin_bound),
      DOCKING_SUB("ang_bound", input_bounds.ang_bound),
      DOCKING_SUB("epsilon_theta", tolerances.epsilon_theta),
      DOCKING_SUB("relock_margin", tolerances.relock_margin),
      Field{"control_dt", &ScenarioConfig::control_dt},
      Field{"physics_dt", &ScenarioConfig::physics_dt},
      Field{"t_max", &ScenarioConfig::t_max},
  };
  return table;
}

#undef DOCKING_SUB

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// number | [number*]pi[/number]
std::optional<double> parse_scalar(std::string_view s) {
  s = trim(s);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) return parse_number(s);
  double factor = 1.0;
  std::string_view head = trim(s.substr(0, pi_at));
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty()) {
    if (head.back() != '*') return std::nullopt;
    auto f = parse_number(head.substr(0, head.size() - 1));
    if (!f) return std::nullopt;
    factor = *f;
  }
  std::string_view tail = trim(s.substr(pi_at + 2));
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    auto d = parse_number(tail.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    divisor = *d;
  }
  return factor * kPi / divisor;
}

double* lookup(ScenarioConfig& c, std::string_view key) {
  for (const Field& f : fields()) {
    if (key != f.key) continue;
    return f.top ? &(c.*(f.top)) : f.resolve(c);
  }
  return nullptr;
}

void set_key(ScenarioConfig& c, std::string_view key, std::string_view value,
             const std::string& where) {
  if (key == "seed") {
    std::uint64_t seed = 0;
    const std::string_view v = trim(value);
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
      throw ConfigError(where + "seed must be a non-negative integer, got '" + std::string(value) + "'");
    c.seed = seed;
    return;
  }
  double* slot = lookup(c, key);
  if (!slot) throw ConfigError(where + "unknown key '" + std::string(key) + "'");
  const auto v = parse_scalar(value);
  if (!v)
    throw ConfigError(where + "malformed value '" + std::string(value) + "' for key '" +
                      std::string(key) + "'");
  *slot = *v;
  if (key == "epsilon_dock") c.tolerances.epsilon_dock = *v;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const Field& f : fields()) k.emplace_back(f.key);
    k.emplace_back("seed");
    return k;
  }();
  return keys;
}

void ScenarioConfig::validate() const {
  if (!is_finite(initial_state)) throw ConfigError("initial state must be finite");
  rigid_body.validate();
  safety.validate();
  vision.validate();
  barrier_gains.validate();
  nominal_gains.validate();
  inner_gains.validate();
  input_bounds.validate();
  tolerances.validate();
  if (vision.epsilon_dock != tolerances.epsilon_dock)
    throw ConfigError("visual exclusion disk and docking tolerance must agree");
  if (!(std::isfinite(control_dt) && control_dt > 0.0)) throw ConfigError("control_dt must be positive");
  if (!(std::isfinite(physics_dt) && physics_dt > 0.0)) throw ConfigError("physics_dt must be positive");
  const double ratio = control_dt / physics_dt;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio || std::round(ratio) < 1.0)
    throw ConfigError("control_dt must be an integer multiple of physics_dt");
  if (!(std::isfinite(t_max) && t_max > 0.0)) throw ConfigError("t_max must be positive");
}

int ScenarioConfig::physics_steps_per_tick() const {
  return static_cast<int>(std::lround(control_dt / physics_dt));
}

ScenarioConfig parse_config(std::string_view text, const std::string& origin) {
  ScenarioConfig c;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    if (!seen.emplace(key).second) throw ConfigError(where + "duplicate key '" + std::string(key) + "'");
    set_key(c, key, line.substr(eq + 1), where);
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

void apply_override(ScenarioConfig& config, std::string_view key, std::string_view value) {
  set_key(config, trim(key), value, "override: ");
}

void apply_override(ScenarioConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
  apply_override(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

double get_value(const ScenarioConfig& config, std::string_view key) {
  if (key == "seed") return static_cast<double>(config.seed);
  ScenarioConfig copy = config;
  double* slot = lookup(copy, key);
  if (!slot) throw ConfigError("unknown key '" + std::string(key) + "'");
  return *slot;
}

std::string to_text(const ScenarioConfig& config) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const Field& f : fields()) out << f.key << " = " << get_value(config, f.key) << '\n';
  out << "seed = " << config.seed << '\n';
  return out.str();
}

}  // namespace docking
