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

#include "docking/rigid_body.hpp"

#include <cmath>
#include <string>

#include "docking/angle.hpp"
#include "docking/errors.hpp"

namespace docking {

void RigidBodyParams::validate() const {
  if (!(std::isfinite(mass) && mass > 0.0))
    throw ConfigError("mass must be positive, got " + std::to_string(mass));
  if (!(std::isfinite(inertia_zz) && inertia_zz > 0.0))
    throw ConfigError("inertia_zz must be positive, got " + std::to_string(inertia_zz));
}

bool is_finite(const SliderState& s) {
  return std::isfinite(s.r_x) && std::isfinite(s.r_y) && std::isfinite(s.theta) &&
         std::isfinite(s.v_x) && std::isfinite(s.v_y) && std::isfinite(s.omega_z);
}

bool is_finite(const Wrench& w) {
  return std::isfinite(w.f_x) && std::isfinite(w.f_y) && std::isfinite(w.tau_z);
}

SliderStateDerivative full_dynamics(const SliderState& s, const Wrench& w,
                                    const RigidBodyParams& p) {
  if (!is_finite(s) || !is_finite(w))
    throw NonFiniteError("full_dynamics: non-finite state or wrench");
  const double c = std::cos(s.theta);
  const double sn = std::sin(s.theta);
  SliderStateDerivative d;
  d.r_x = s.v_x * c - s.v_y * sn;
  d.r_y = s.v_x * sn + s.v_y * c;
  d.theta = s.omega_z;
  d.v_x = s.omega_z * s.v_y + w.f_x / p.mass;
  d.v_y = -s.omega_z * s.v_x + w.f_y / p.mass;
  d.omega_z = w.tau_z / p.inertia_zz;
  return d;
}

namespace {

// Heading is integrated unwrapped inside a step and wrapped once at the end.
SliderState advance(const SliderState& s, const SliderStateDerivative& d, double h) {
  return {s.r_x + h * d.r_x,         s.r_y + h * d.r_y, s.theta + h * d.theta,
          s.v_x + h * d.v_x,         s.v_y + h * d.v_y, s.omega_z + h * d.omega_z};
}

template <typename DerivFn>
SliderState rk4(const SliderState& s, double dt, DerivFn&& f) {
  if (!(dt >= 0.0)) throw std::invalid_argument("step_rk4: dt must be >= 0");
  if (dt == 0.0) return s;
  const SliderStateDerivative k1 = f(s);
  const SliderStateDerivative k2 = f(advance(s, k1, 0.5 * dt));
  const SliderStateDerivative k3 = f(advance(s, k2, 0.5 * dt));
  const SliderStateDerivative k4 = f(advance(s, k3, dt));
  const double w = dt / 6.0;
  SliderState out;
  out.r_x = s.r_x + w * (k1.r_x + 2.0 * (k2.r_x + k3.r_x) + k4.r_x);
  out.r_y = s.r_y + w * (k1.r_y + 2.0 * (k2.r_y + k3.r_y) + k4.r_y);
  out.theta = s.theta + w * (k1.theta + 2.0 * (k2.theta + k3.theta) + k4.theta);
  out.v_x = s.v_x + w * (k1.v_x + 2.0 * (k2.v_x + k3.v_x) + k4.v_x);
  out.v_y = s.v_y + w * (k1.v_y + 2.0 * (k2.v_y + k3.v_y) + k4.v_y);
  out.omega_z = s.omega_z + w * (k1.omega_z + 2.0 * (k2.omega_z + k3.omega_z) + k4.omega_z);
  if (!is_finite(out)) throw NonFiniteError("step_rk4: non-finite result");
  out.theta = wrap_angle(out.theta);
  return out;
}

}  // namespace

SliderState step_rk4(const SliderState& state, const Wrench& wrench,
                     const RigidBodyParams& params, double dt) {
  return rk4(state, dt, [&](const SliderState& x) { return full_dynamics(x, wrench, params); });
}

SliderState step_rk4(const SliderState& state, const WrenchLaw& law,
                     const RigidBodyParams& params, double dt) {
  return rk4(state, dt, [&](const SliderState& x) { return full_dynamics(x, law(x), params); });
}

Eigen::Vector2d body_to_inertial(const Eigen::Vector2d& v, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

Eigen::Vector2d inertial_to_body(const Eigen::Vector2d& v, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * v.x() + s * v.y(), -s * v.x() + c * v.y()};
}

}  // namespace docking
