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

#include "docking/angle.hpp"
#include "docking/rigid_body.hpp"

namespace docking {

/// Outer-loop configuration: inertial position and heading.
struct Pose {
  double r_x = 0.0;
  double r_y = 0.0;
  double theta = 0.0;  // wrapped to (-pi, pi]

  double range() const { return std::hypot(r_x, r_y); }
  Eigen::Vector3d vector() const { return {r_x, r_y, theta}; }
  bool operator==(const Pose&) const = default;
};

inline Pose pose_of(const SliderState& s) { return {s.r_x, s.r_y, s.theta}; }

struct SafetyParams {
  double cardioid_a = 0.75;  // m

  void validate() const;
};

struct VisionParams {
  double theta_v = kPi / 15.0;             // rad
  double theta_v_bar = kPi / 150.0;        // rad, used while acquiring the lock
  double epsilon_dock = 0.05;              // m

  void validate() const;
};

/// Barrier value and its gradient with respect to (r_x, r_y, theta).
struct BarrierEvaluation {
  double value = 0.0;
  Eigen::Vector3d grad = Eigen::Vector3d::Zero();
};

/// Class-K scale factors; the class-K function itself is the identity.
struct BarrierGains {
  double k1 = 1.0;
  double k2 = 1.0;
  double k3 = 1.0;

  void validate() const;
};

/// Half-space normal . u >= rhs over u = (vbar_x, vbar_y, omega_z).
struct HalfSpace {
  Eigen::Vector3d normal = Eigen::Vector3d::Zero();
  double rhs = 0.0;

  double residual(const Eigen::Vector3d& u) const { return normal.dot(u) - rhs; }
};

/// Cardioid barrier: non-negative outside the cardioid with its cusp at the
/// port and its body enclosing the station along -x.
BarrierEvaluation eval_h1(const Pose& pose, const SafetyParams& sp);

/// Heading-relative bearing of the port, wrap(atan2(-r_y, -r_x) - theta).
/// Throws UndefinedAtPort inside the epsilon_dock disk.
double bearing_error(const Pose& pose, const VisionParams& vp);

/// Lower and upper edges of the vision cone of the given half-angle.
BarrierEvaluation eval_h2(const Pose& pose, const VisionParams& vp, double half_angle);
BarrierEvaluation eval_h3(const Pose& pose, const VisionParams& vp, double half_angle);

/// Encodes grad . u >= -k * value.
HalfSpace constraint_row(const BarrierEvaluation& be, double k);

/// Worst relative error between analytic gradients and central differences
/// over h1, h2 and h3 (the visual pair at vp.theta_v). The error of each
/// barrier is |fd - grad| / max(|grad|, 1) in the 2-norm, so that the
/// interior critical point of h1 is handled as an absolute check.
double check_gradients(const Pose& pose, double eps, const SafetyParams& sp = {},
                       const VisionParams& vp = {});

}  // namespace docking
