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

#include <filesystem>
#include <string>
#include <vector>

#include "docking/simulation.hpp"

namespace docking {

/// Trajectory CSV column names, in order.
const std::vector<std::string>& csv_columns();

std::string log_to_csv(const TrajectoryLog& log);
void write_log_csv(const TrajectoryLog& log, const std::filesystem::path& path);

// Metrics are a flat JSON object with exactly the RunMetrics field names.
// time_to_lock is null when never reached; an undefined minimum (no tick
// outside the docking disk) is written as null and read back as +inf.
std::string metrics_to_json(const RunMetrics& m);
RunMetrics metrics_from_json(const std::string& text);
void write_metrics_json(const RunMetrics& m, const std::filesystem::path& path);
RunMetrics read_metrics_json(const std::filesystem::path& path);

/// Cardioid boundary, vision-cone rays and the trajectory, as JSON.
std::string plot_data_json(const TrajectoryLog& log, const ScenarioConfig& config);
void emit_plot_data(const TrajectoryLog& log, const ScenarioConfig& config,
                    const std::filesystem::path& path);

}  // namespace docking
