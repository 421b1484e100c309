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
#include <span>
#include <vector>

#include "docking/barriers.hpp"

namespace docking {

/// Outer-loop input: inertial linear velocity and yaw rate.
struct CommandVector {
  double vbar_x = 0.0;
  double vbar_y = 0.0;
  double omega_z = 0.0;

  Eigen::Vector3d vector() const { return {vbar_x, vbar_y, omega_z}; }
  static CommandVector from(const Eigen::Vector3d& u) { return {u.x(), u.y(), u.z()}; }
  bool operator==(const CommandVector&) const = default;
};

/// Box |vbar_x|, |vbar_y| <= lin_bound, |omega_z| <= ang_bound.
struct InputBounds {
  double lin_bound = 0.5;  // m/s
  double ang_bound = 0.5;  // rad/s

  void validate() const;
  bool contains(const CommandVector& u) const;
};

struct NominalGains {
  double p1 = 0.15;
  double p2 = 0.15;
  double p3 = 0.15;

  void validate() const;
};

enum class RowKind { Safety, Visual };

struct TaggedRow {
  HalfSpace row;
  RowKind kind = RowKind::Safety;
};

struct FilterResult {
  CommandVector command;
  // Indices of constraints tight at the command: barrier rows by position in
  // the input, then the six box faces as rows.size() + {0..5}.
  std::vector<int> active_set;
  std::vector<double> slack_used;  // one entry per visual row, rad/s
  bool feasible = true;            // false when the visual rows had to be relaxed
};

inline constexpr double kSlackWeight = 1e6;

/// Proportional docking law toward the origin with heading pi.
CommandVector nominal_control(const Pose& pose, const NominalGains& gains);

struct QpResult {
  CommandVector command;
  std::vector<int> active_set;
};

/// Minimizer of |u - u_nom|^2 over the box intersected with all half-spaces.
/// Throws InfeasibleQP if that set is empty.
QpResult solve_qp_detailed(const CommandVector& u_nom, std::span<const HalfSpace> rows,
                           const InputBounds& box);
CommandVector solve_qp(const CommandVector& u_nom, std::span<const HalfSpace> rows,
                       const InputBounds& box);

/// Min-norm correction of u_nom subject to every barrier row. If that QP is
/// infeasible the visual rows are relaxed with slack penalized by
/// slack_weight; safety rows always stay hard. Throws InfeasibleQP when even
/// the relaxed problem is empty.
FilterResult safety_filter(const Pose& pose, const CommandVector& u_nom,
                           std::span<const TaggedRow> barrier_rows, const InputBounds& box,
                           double slack_weight = kSlackWeight);

}  // namespace docking
