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
#include <iosfwd>
#include <string>
#include <vector>

#include "docking/simulation.hpp"
#include "docking/sweep.hpp"

namespace docking::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

inline constexpr double kBarrierTolerance = 1e-3;

/// Pass/fail verdict for one closed-loop run. Runs that start locked must
/// keep every barrier above -kBarrierTolerance without slack; runs that start
/// unlocked must acquire the lock and meet the same bar from then on.
int run_verdict(const ScenarioResult& result);

int cmd_run(const std::filesystem::path& config_path, const std::filesystem::path& output_dir,
            const std::vector<std::string>& overrides, std::ostream& out, std::ostream& err);
int cmd_check(long sample_count, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_sweep(const std::filesystem::path& config_path, const SweepSpec& spec,
              const std::filesystem::path& output_dir, const std::vector<std::string>& overrides,
              std::ostream& out, std::ostream& err);
int cmd_plot_data(const std::filesystem::path& config_path, const std::filesystem::path& output_dir,
                  const std::vector<std::string>& overrides, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; never throws.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace docking::cli
