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

#include <Eigen/Core>
#include <functional>

namespace docking {

/// Full planar state: inertial position, heading, body-frame velocities.
struct SliderState {
  double r_x = 0.0;
  double r_y = 0.0;
  double theta = 0.0;  // wrapped to (-pi, pi]
  double v_x = 0.0;
  double v_y = 0.0;
  double omega_z = 0.0;

  bool operator==(const SliderState&) const = default;
};

/// Time derivative of every SliderState field, in field order.
struct SliderStateDerivative {
  double r_x = 0.0;
  double r_y = 0.0;
  double theta = 0.0;
  double v_x = 0.0;
  double v_y = 0.0;
  double omega_z = 0.0;

  bool operator==(const SliderStateDerivative&) const = default;
};

/// Body-frame force pair and yaw torque.
struct Wrench {
  double f_x = 0.0;
  double f_y = 0.0;
  double tau_z = 0.0;

  bool operator==(const Wrench&) const = default;
};

struct RigidBodyParams {
  double mass = 4.82;        // kg
  double inertia_zz = 0.11;  // kg m^2

  // Throws ConfigError unless both are positive and finite.
  void validate() const;
};

bool is_finite(const SliderState& s);
bool is_finite(const Wrench& w);

/// Right-hand side of the planar rigid-body equations of motion, including
/// the Coriolis coupling between the body-frame velocities. Throws
/// NonFiniteError on non-finite input.
SliderStateDerivative full_dynamics(const SliderState& state, const Wrench& wrench,
                                    const RigidBodyParams& params);

/// One classical RK4 step with the wrench held constant across the step.
SliderState step_rk4(const SliderState& state, const Wrench& wrench,
                     const RigidBodyParams& params, double dt);

/// State-feedback wrench, re-evaluated at every RK4 stage.
using WrenchLaw = std::function<Wrench(const SliderState&)>;

/// One RK4 step of the closed loop x' = f(x, law(x)). Used for the inner
/// velocity loop, which runs as a continuous-time controller.
SliderState step_rk4(const SliderState& state, const WrenchLaw& law,
                     const RigidBodyParams& params, double dt);

Eigen::Vector2d body_to_inertial(const Eigen::Vector2d& v_body, double theta);
Eigen::Vector2d inertial_to_body(const Eigen::Vector2d& v_inertial, double theta);

}  // namespace docking
