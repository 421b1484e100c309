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

#include <optional>
#include <string>
#include <vector>

#include "docking/scenario_config.hpp"

namespace docking {

/// One control tick. Barrier values are logged at the nominal theta_v even
/// while acquiring; h2/h3 are NaN inside the epsilon_dock disk where they are
/// undefined.
struct TrajectoryRecord {
  double t = 0.0;
  SliderState state;
  Pose pose;
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  CommandVector command;            // filtered outer-loop command
  BodyVelocityCommand body_command; // the same, rotated into the body frame
  Wrench wrench;                    // inner-loop wrench at the start of the tick
  SupervisorMode mode = SupervisorMode::Locked;
  double slack = 0.0;               // 2-norm of visual-row slack
  bool relaxed = false;             // visual rows were softened this tick
  std::vector<int> active_set;
};

struct ModeTransition {
  double t = 0.0;
  SupervisorMode from = SupervisorMode::Locked;
  SupervisorMode to = SupervisorMode::Locked;
};

enum class Termination { Docked, TimeLimit, Infeasible };

std::string_view to_string(Termination t);

struct TrajectoryLog {
  std::vector<TrajectoryRecord> records;
  std::vector<ModeTransition> transitions;
  Termination termination = Termination::TimeLimit;
  std::string diagnostic;
};

struct RunMetrics {
  double min_h1 = 0.0;
  double min_h2 = 0.0;
  double min_h3 = 0.0;
  std::optional<double> time_to_lock;  // 0 when the run starts locked
  double final_position_error = 0.0;
  double final_heading_error = 0.0;
  bool docked = false;
  int qp_infeasible_count = 0;

  bool operator==(const RunMetrics&) const = default;
};

struct ScenarioResult {
  TrajectoryLog log;
  RunMetrics metrics;
};

/// Closed-loop run: 100 Hz outer loop (barriers, supervisor, nominal law,
/// safety filter) over an inner velocity loop integrated at physics_dt.
/// Stops at Docked, at t_max, or when the relaxed filter is infeasible (the
/// latter is reported in the log, not thrown). Validates the config first.
ScenarioResult run_scenario(const ScenarioConfig& config);

/// Metrics as a pure function of the log.
RunMetrics compute_metrics(const TrajectoryLog& log);

/// Post-lock view used for pass/fail decisions on runs that start unlocked:
/// minima of h2, h3 and total slack restricted to ticks at or after
/// time_to_lock. Empty when the lock is never reached.
struct LockedSegment {
  double min_h2 = 0.0;
  double min_h3 = 0.0;
  double max_slack = 0.0;
};
std::optional<LockedSegment> locked_segment(const TrajectoryLog& log, const RunMetrics& metrics);

/// Polyline length of the logged positions.
double path_length(const TrajectoryLog& log);

}  // namespace docking
