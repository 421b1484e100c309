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

#include <cmath>
#include <numbers>

namespace docking {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maps any finite angle onto (-pi, pi].
inline double wrap_angle(double angle) {
  double r = std::fmod(angle + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  r -= kPi;
  return r <= -kPi ? kPi : r;
}

}  // namespace docking
