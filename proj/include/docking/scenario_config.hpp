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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "docking/barriers.hpp"
#include "docking/inner_loop.hpp"
#include "docking/rigid_body.hpp"
#include "docking/safety_filter.hpp"
#include "docking/supervisor.hpp"

namespace docking {

struct ScenarioConfig {
  SliderState initial_state;
  RigidBodyParams rigid_body;
  SafetyParams safety;
  VisionParams vision;
  BarrierGains barrier_gains;
  NominalGains nominal_gains;
  InnerLoopGains inner_gains;
  InputBounds input_bounds;
  DockingTolerances tolerances;
  double control_dt = 0.01;   // s
  double physics_dt = 0.001;  // s
  double t_max = 120.0;       // s
  std::uint64_t seed = 0;

  // Throws ConfigError on the first violated invariant.
  void validate() const;
  int physics_steps_per_tick() const;
};

/// Every key accepted in a scenario file, in canonical order.
const std::vector<std::string>& config_keys();

// File format: one `key = value` per line, `#` starts a comment, blank lines
// ignored. Values are decimal numbers; angles may also be written as
// multiples of pi (`pi`, `pi/15`, `2*pi/3`, `-0.5*pi`). `epsilon_dock` sets
// both the visual-barrier exclusion disk and the docking position tolerance.
// Unknown or repeated keys are rejected. Parsing does not validate.
ScenarioConfig parse_config(std::string_view text, const std::string& origin = "<string>");
ScenarioConfig load_config(const std::filesystem::path& path);

/// Sets one key; throws ConfigError for unknown keys or malformed values.
void apply_override(ScenarioConfig& config, std::string_view key, std::string_view value);
/// Parses `key=value`.
void apply_override(ScenarioConfig& config, std::string_view assignment);

double get_value(const ScenarioConfig& config, std::string_view key);

/// Canonical text form; parse_config(to_text(c)) reproduces c.
std::string to_text(const ScenarioConfig& config);

}  // namespace docking
