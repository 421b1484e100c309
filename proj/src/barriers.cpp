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

#include "docking/barriers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "docking/errors.hpp"

namespace docking {

void SafetyParams::validate() const {
  if (!(std::isfinite(cardioid_a) && cardioid_a > 0.0))
    throw ConfigError("cardioid_a must be positive");
}

void VisionParams::validate() const {
  if (!(std::isfinite(theta_v) && std::isfinite(theta_v_bar) && theta_v_bar > 0.0 &&
        theta_v_bar < theta_v && theta_v < kPi / 2.0))
    throw ConfigError("vision half-angles must satisfy 0 < theta_v_bar < theta_v < pi/2");
  if (!(std::isfinite(epsilon_dock) && epsilon_dock > 0.0))
    throw ConfigError("epsilon_dock must be positive");
}

void BarrierGains::validate() const {
  for (double k : {k1, k2, k3})
    if (!(std::isfinite(k) && k > 0.0)) throw ConfigError("barrier gains k1..k3 must be positive");
}

BarrierEvaluation eval_h1(const Pose& pose, const SafetyParams& sp) {
  const double x = pose.r_x;
  const double y = pose.r_y;
  const double a = sp.cardioid_a;
  const double rr = x * x + y * y;
  BarrierEvaluation be;
  be.value = rr * rr + 4.0 * a * x * rr - 4.0 * a * a * y * y;
  be.grad.x() = 4.0 * rr * x + 4.0 * a * rr + 8.0 * a * x * x;
  be.grad.y() = 4.0 * rr * y + 8.0 * a * x * y - 8.0 * a * a * y;
  be.grad.z() = 0.0;
  return be;
}

double bearing_error(const Pose& pose, const VisionParams& vp) {
  if (!(pose.range() > vp.epsilon_dock))
    throw UndefinedAtPort("visual-lock barrier undefined within " +
                          std::to_string(vp.epsilon_dock) + " m of the port");
  // 0.0 - r avoids atan2(-0.0, .) landing on -pi; wrap() makes it moot anyway.
  const double bearing = std::atan2(0.0 - pose.r_y, 0.0 - pose.r_x);
  return wrap_angle(bearing - pose.theta);
}

namespace {

Eigen::Vector3d bearing_gradient(const Pose& pose) {
  const double rr = pose.r_x * pose.r_x + pose.r_y * pose.r_y;
  return {-pose.r_y / rr, pose.r_x / rr, -1.0};
}

}  // namespace

BarrierEvaluation eval_h2(const Pose& pose, const VisionParams& vp, double half_angle) {
  BarrierEvaluation be;
  be.value = bearing_error(pose, vp) + half_angle;
  be.grad = bearing_gradient(pose);
  return be;
}

BarrierEvaluation eval_h3(const Pose& pose, const VisionParams& vp, double half_angle) {
  BarrierEvaluation be;
  be.value = half_angle - bearing_error(pose, vp);
  be.grad = -bearing_gradient(pose);
  return be;
}

HalfSpace constraint_row(const BarrierEvaluation& be, double k) {
  return {be.grad, -k * be.value};
}

double check_gradients(const Pose& pose, double eps, const SafetyParams& sp,
                       const VisionParams& vp) {
  struct Barrier {
    std::function<BarrierEvaluation(const Pose&)> eval;
    bool angular;
  };
  const Barrier barriers[] = {
      {[&](const Pose& p) { return eval_h1(p, sp); }, false},
      {[&](const Pose& p) { return eval_h2(p, vp, vp.theta_v); }, true},
      {[&](const Pose& p) { return eval_h3(p, vp, vp.theta_v); }, true},
  };
  const double step = eps * std::max(1.0, pose.vector().norm());
  double worst = 0.0;
  for (const Barrier& h : barriers) {
    const BarrierEvaluation at = h.eval(pose);
    Eigen::Vector3d fd;
    for (int i = 0; i < 3; ++i) {
      Eigen::Vector3d plus = pose.vector();
      Eigen::Vector3d minus = pose.vector();
      plus[i] += step;
      minus[i] -= step;
      const double hp = h.eval({plus.x(), plus.y(), plus.z()}).value;
      const double hm = h.eval({minus.x(), minus.y(), minus.z()}).value;
      // The bearing error jumps by 2 pi where the port is directly astern.
      const double diff = h.angular ? wrap_angle(hp - hm) : hp - hm;
      fd[i] = diff / (2.0 * step);
    }
    worst = std::max(worst, (fd - at.grad).norm() / std::max(at.grad.norm(), 1.0));
  }
  return worst;
}

}  // namespace docking
