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

#include <string_view>

#include "docking/barriers.hpp"

namespace docking {

enum class SupervisorMode { Locked, Acquiring, Docked };

std::string_view to_string(SupervisorMode mode);

struct DockingTolerances {
  double epsilon_dock = 0.05;   // m
  double epsilon_theta = 0.05;  // rad
  double relock_margin = 0.02;  // rad, hysteresis on the way back to Locked

  void validate() const;
};

enum class DockingStatus { InProgress, Docked };

DockingStatus docking_status(const Pose& pose, const DockingTolerances& tol);

/// What the safety filter should enforce on this control tick.
struct SupervisorDecision {
  SupervisorMode mode = SupervisorMode::Locked;
  double half_angle = 0.0;   // vision-cone half-angle for both visual rows
  bool safety_row = true;    // h1
  bool visual_rows = true;   // h2, h3
};

// Locked -> Acquiring as soon as the port leaves the theta_v cone; while
// acquiring both visual rows use theta_v_bar; Acquiring -> Locked once the
// port sits at least relock_margin inside the theta_v cone. Docked absorbs.
// Within epsilon_dock of the port the visual rows are undefined and dropped
// without a mode change.
SupervisorDecision update(const Pose& pose, SupervisorMode mode, const VisionParams& vp,
                          const DockingTolerances& tol);

}  // namespace docking
