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

#include <random>

#include "docking/barriers.hpp"

namespace docking {

using Rng = std::mt19937_64;

/// Whether the sampled start sees the port inside the theta_v cone.
enum class StartKind { Locked, Unlocked };

// Rejection samplers over the safe set H (h1 > 0). Positions are uniform in
// range |r| in [r_min, r_max] and uniform in polar angle; the heading is then
// set from the bearing error, uniform over the cone (Locked) or over its
// complement (Unlocked).
Pose sample_start(Rng& rng, StartKind kind, double r_min, double r_max, const SafetyParams& sp,
                  const VisionParams& vp);

/// Uniform pose over the disk annulus with arbitrary heading.
Pose sample_pose(Rng& rng, double r_min, double r_max);

bool in_safe_set(const Pose& pose, const SafetyParams& sp);
bool in_vision_cone(const Pose& pose, const VisionParams& vp, double half_angle);

}  // namespace docking
