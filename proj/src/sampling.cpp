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

#include "docking/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace docking {

Pose sample_pose(Rng& rng, double r_min, double r_max) {
  std::uniform_real_distribution<double> range(r_min, r_max);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  const double r = range(rng);
  const double phi = angle(rng);
  return {r * std::cos(phi), r * std::sin(phi), wrap_angle(angle(rng))};
}

bool in_safe_set(const Pose& pose, const SafetyParams& sp) { return eval_h1(pose, sp).value >= 0.0; }

bool in_vision_cone(const Pose& pose, const VisionParams& vp, double half_angle) {
  return eval_h2(pose, vp, half_angle).value >= 0.0 && eval_h3(pose, vp, half_angle).value >= 0.0;
}

Pose sample_start(Rng& rng, StartKind kind, double r_min, double r_max, const SafetyParams& sp,
                  const VisionParams& vp) {
  if (!(r_min > vp.epsilon_dock && r_max >= r_min))
    throw std::invalid_argument("sample_start: need epsilon_dock < r_min <= r_max");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Pose p = sample_pose(rng, r_min, r_max);
    if (!(eval_h1(p, sp).value > 0.0)) continue;
    const double bearing = std::atan2(-p.r_y, -p.r_x);
    double e = 0.0;
    if (kind == StartKind::Locked) {
      e = vp.theta_v * (2.0 * unit(rng) - 1.0);
    } else {
      // |e| uniform on (theta_v, pi], either side.
      const double mag = vp.theta_v + (kPi - vp.theta_v) * (1.0 - unit(rng));
      e = unit(rng) < 0.5 ? -mag : mag;
    }
    p.theta = wrap_angle(bearing - e);
    const bool locked = in_vision_cone(p, vp, vp.theta_v);
    if (locked == (kind == StartKind::Locked)) return p;
  }
  throw std::runtime_error("sample_start: rejection sampling did not converge");
}

}  // namespace docking
