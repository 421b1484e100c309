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

namespace docking::qp {

/// normal . x >= rhs
struct LinearConstraint {
  Eigen::VectorXd normal;
  double rhs = 0.0;
};

struct Projection {
  Eigen::VectorXd x;
  std::vector<int> active;  // constraints tight at x, by input index
  double objective = 0.0;   // |x - target|^2
};

inline constexpr int kMaxDimension = 8;

/// Euclidean projection of `target` onto the polyhedron defined by
/// `constraints`, i.e. the unique minimizer of |x - target|^2.
///
/// Exact active-set enumeration: every linearly independent working set of
/// at most n constraints is solved as an equality-constrained projection and
/// accepted once it passes the KKT test (non-negative multipliers, primal
/// feasibility). Meant for the handful of constraints of a per-tick safety
/// filter; the number of working sets grows combinatorially with m.
///
/// Throws InfeasibleQP if the polyhedron is empty. An empty verdict is only
/// issued after a vertex enumeration also finds no feasible point.
Projection project(const Eigen::VectorXd& target, std::span<const LinearConstraint> constraints);

}  // namespace docking::qp
