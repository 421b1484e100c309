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

#include "docking/rigid_body.hpp"

namespace docking {

struct InnerLoopGains {
  double c1 = 20.0;  // 1/s
  double c2 = 20.0;
  double c3 = 20.0;

  void validate() const;
};

/// Desired body-frame velocities handed down by the outer loop.
struct BodyVelocityCommand {
  double v_x_d = 0.0;
  double v_y_d = 0.0;
  double omega_z_d = 0.0;

  bool operator==(const BodyVelocityCommand&) const = default;
};

// Feedback-linearizing tracking law. The Coriolis terms are cancelled and each
// velocity error obeys e' = -c e; the commanded velocities are treated as
// piecewise constant, so no feed-forward derivative term appears.
Wrench compute_wrench(const SliderState& state, const BodyVelocityCommand& cmd,
                      const InnerLoopGains& gains, const RigidBodyParams& params);

/// Same law with the feed-forward derivative of the desired velocities.
Wrench compute_wrench(const SliderState& state, const BodyVelocityCommand& cmd,
                      const BodyVelocityCommand& cmd_rate, const InnerLoopGains& gains,
                      const RigidBodyParams& params);

/// Body-frame reference for an inertial velocity command held constant:
/// v_d = R(theta)^T vbar, seen from the body frame at the current heading.
BodyVelocityCommand body_reference(const SliderState& state, const Eigen::Vector2d& vbar,
                                   double omega_d);

// Tracks an inertial linear-velocity command held constant in the inertial
// frame. The body-frame reference then turns with the platform,
// d/dt v_d = omega_z (v_y_d, -v_x_d), and that rate is fed forward so the
// inertial velocity itself converges as e^{-c t} with no steady lag.
Wrench track_inertial_command(const SliderState& state, const Eigen::Vector2d& vbar,
                              double omega_d, const InnerLoopGains& gains,
                              const RigidBodyParams& params);

}  // namespace docking
