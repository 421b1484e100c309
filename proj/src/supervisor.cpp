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

#include "docking/supervisor.hpp"

#include <cmath>

#include "docking/errors.hpp"

namespace docking {

std::string_view to_string(SupervisorMode mode) {
  switch (mode) {
    case SupervisorMode::Locked:
      return "locked";
    case SupervisorMode::Acquiring:
      return "acquiring";
    case SupervisorMode::Docked:
      return "docked";
  }
  return "unknown";
}

void DockingTolerances::validate() const {
  for (double v : {epsilon_dock, epsilon_theta, relock_margin})
    if (!(std::isfinite(v) && v > 0.0))
      throw ConfigError("docking tolerances must be positive");
}

DockingStatus docking_status(const Pose& pose, const DockingTolerances& tol) {
  const bool at_port = pose.range() <= tol.epsilon_dock;
  const bool aligned = std::abs(wrap_angle(pose.theta - kPi)) <= tol.epsilon_theta;
  return at_port && aligned ? DockingStatus::Docked : DockingStatus::InProgress;
}

SupervisorDecision update(const Pose& pose, SupervisorMode mode, const VisionParams& vp,
                          const DockingTolerances& tol) {
  SupervisorDecision d;
  if (mode == SupervisorMode::Docked || docking_status(pose, tol) == DockingStatus::Docked) {
    d.mode = SupervisorMode::Docked;
    d.safety_row = false;
    d.visual_rows = false;
    return d;
  }

  d.mode = mode;
  if (pose.range() <= vp.epsilon_dock) {
    d.visual_rows = false;
  } else {
    const double h2 = eval_h2(pose, vp, vp.theta_v).value;
    const double h3 = eval_h3(pose, vp, vp.theta_v).value;
    if (mode == SupervisorMode::Locked && (h2 < 0.0 || h3 < 0.0))
      d.mode = SupervisorMode::Acquiring;
    else if (mode == SupervisorMode::Acquiring && h2 >= tol.relock_margin &&
             h3 >= tol.relock_margin)
      d.mode = SupervisorMode::Locked;
  }
  d.half_angle = d.mode == SupervisorMode::Acquiring ? vp.theta_v_bar : vp.theta_v;
  return d;
}

}  // namespace docking
