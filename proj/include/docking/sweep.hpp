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
#include <utility>
#include <vector>

#include "docking/sampling.hpp"
#include "docking/simulation.hpp"

namespace docking {

struct GridAxis {
  std::string key;
  std::vector<double> values;
};

struct SweepSpec {
  std::vector<GridAxis> grid;        // Cartesian product over the axes
  int random_samples = 0;            // random starts per grid point
  StartKind start = StartKind::Locked;
  double r_min = 1.0;
  double r_max = 3.0;
  std::uint64_t seed = 0;
  int threads = 0;                   // 0: hardware concurrency

  bool empty() const { return grid.empty() && random_samples == 0; }
};

struct SweepRun {
  int index = 0;
  std::vector<std::pair<std::string, double>> settings;  // overridden keys
  std::optional<RunMetrics> metrics;                     // empty on error
  Termination termination = Termination::TimeLimit;
  double path_length = 0.0;
  std::string error;
};

/// Expands the spec into concrete scenarios, in index order.
std::vector<std::pair<ScenarioConfig, std::vector<std::pair<std::string, double>>>> expand_sweep(
    const ScenarioConfig& base, const SweepSpec& spec);

/// Runs every expanded scenario (in parallel when threads allow); results come
/// back ordered by index regardless of scheduling. A failing scenario records
/// its error and does not stop the others.
std::vector<SweepRun> sweep(const ScenarioConfig& base, const SweepSpec& spec);

/// Parses `key=v1,v2,...`.
GridAxis parse_grid_axis(const std::string& text);

}  // namespace docking
