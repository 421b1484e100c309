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

#include "docking/inner_loop.hpp"

#include <cmath>

#include "docking/errors.hpp"

namespace docking {

void InnerLoopGains::validate() const {
  for (double c : {c1, c2, c3})
    if (!(std::isfinite(c) && c > 0.0)) throw ConfigError("inner-loop gains c1..c3 must be positive");
}

Wrench compute_wrench(const SliderState& s, const BodyVelocityCommand& cmd,
                      const InnerLoopGains& g, const RigidBodyParams& p) {
  return compute_wrench(s, cmd, BodyVelocityCommand{}, g, p);
}

Wrench compute_wrench(const SliderState& s, const BodyVelocityCommand& cmd,
                      const BodyVelocityCommand& rate, const InnerLoopGains& g,
                      const RigidBodyParams& p) {
  if (!is_finite(s) || !std::isfinite(cmd.v_x_d) || !std::isfinite(cmd.v_y_d) ||
      !std::isfinite(cmd.omega_z_d))
    throw NonFiniteError("compute_wrench: non-finite input");
  Wrench w;
  w.f_x = p.mass * (-s.v_y * s.omega_z - g.c1 * (s.v_x - cmd.v_x_d) + rate.v_x_d);
  w.f_y = p.mass * (s.v_x * s.omega_z - g.c2 * (s.v_y - cmd.v_y_d) + rate.v_y_d);
  w.tau_z = p.inertia_zz * (-g.c3 * (s.omega_z - cmd.omega_z_d) + rate.omega_z_d);
  return w;
}

BodyVelocityCommand body_reference(const SliderState& s, const Eigen::Vector2d& vbar,
                                   double omega_d) {
  const Eigen::Vector2d v = inertial_to_body(vbar, s.theta);
  return {v.x(), v.y(), omega_d};
}

Wrench track_inertial_command(const SliderState& s, const Eigen::Vector2d& vbar, double omega_d,
                              const InnerLoopGains& g, const RigidBodyParams& p) {
  const BodyVelocityCommand ref = body_reference(s, vbar, omega_d);
  const BodyVelocityCommand rate{s.omega_z * ref.v_y_d, -s.omega_z * ref.v_x_d, 0.0};
  return compute_wrench(s, ref, rate, g, p);
}

}  // namespace docking
