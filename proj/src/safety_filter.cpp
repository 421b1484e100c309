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

#include "docking/safety_filter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "docking/errors.hpp"
#include "docking/qp_solver.hpp"

namespace docking {

void InputBounds::validate() const {
  if (!(std::isfinite(lin_bound) && lin_bound > 0.0 && std::isfinite(ang_bound) &&
        ang_bound > 0.0))
    throw ConfigError("input bounds must be positive");
}

bool InputBounds::contains(const CommandVector& u) const {
  return std::abs(u.vbar_x) <= lin_bound && std::abs(u.vbar_y) <= lin_bound &&
         std::abs(u.omega_z) <= ang_bound;
}

void NominalGains::validate() const {
  for (double p : {p1, p2, p3})
    if (!(std::isfinite(p) && p > 0.0)) throw ConfigError("nominal gains p1..p3 must be positive");
}

CommandVector nominal_control(const Pose& pose, const NominalGains& g) {
  return {-g.p1 * pose.r_x, -g.p2 * pose.r_y, -g.p3 * wrap_angle(pose.theta - kPi)};
}

namespace {

// Box faces over the first three coordinates of a dim-dimensional variable.
void append_box(std::vector<qp::LinearConstraint>& out, const InputBounds& box, int dim) {
  const double bound[3] = {box.lin_bound, box.lin_bound, box.ang_bound};
  for (int i = 0; i < 3; ++i) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd n = Eigen::VectorXd::Zero(dim);
      n[i] = sign;
      out.push_back({std::move(n), -bound[i]});
    }
  }
}

Eigen::Vector3d clamp_to_box(Eigen::Vector3d u, const InputBounds& box) {
  u.x() = std::clamp(u.x(), -box.lin_bound, box.lin_bound);
  u.y() = std::clamp(u.y(), -box.lin_bound, box.lin_bound);
  u.z() = std::clamp(u.z(), -box.ang_bound, box.ang_bound);
  return u;
}

}  // namespace

QpResult solve_qp_detailed(const CommandVector& u_nom, std::span<const HalfSpace> rows,
                           const InputBounds& box) {
  std::vector<qp::LinearConstraint> cons;
  cons.reserve(rows.size() + 6);
  for (const HalfSpace& h : rows) cons.push_back({Eigen::VectorXd(h.normal), h.rhs});
  append_box(cons, box, 3);
  qp::Projection p = qp::project(Eigen::VectorXd(u_nom.vector()), cons);
  return {CommandVector::from(clamp_to_box(p.x.head<3>(), box)), std::move(p.active)};
}

CommandVector solve_qp(const CommandVector& u_nom, std::span<const HalfSpace> rows,
                       const InputBounds& box) {
  return solve_qp_detailed(u_nom, rows, box).command;
}

FilterResult safety_filter(const Pose& pose, const CommandVector& u_nom,
                           std::span<const TaggedRow> barrier_rows, const InputBounds& box,
                           double slack_weight) {
  const auto n_visual = static_cast<int>(std::count_if(
      barrier_rows.begin(), barrier_rows.end(),
      [](const TaggedRow& r) { return r.kind == RowKind::Visual; }));

  std::vector<HalfSpace> hard;
  hard.reserve(barrier_rows.size());
  for (const TaggedRow& r : barrier_rows) hard.push_back(r.row);

  FilterResult out;
  out.slack_used.assign(n_visual, 0.0);
  try {
    QpResult qp = solve_qp_detailed(u_nom, hard, box);
    out.command = qp.command;
    out.active_set = std::move(qp.active_set);
    return out;
  } catch (const InfeasibleQP&) {
    if (n_visual == 0) throw;
  }

  // Relaxed problem over z = (u, sqrt(W) s): the weighted objective becomes a
  // plain projection and each visual row reads g.u + s_j >= rhs.
  const int dim = 3 + n_visual;
  const double scale = std::sqrt(slack_weight);
  std::vector<qp::LinearConstraint> cons;
  int slot = 0;
  for (const TaggedRow& r : barrier_rows) {
    Eigen::VectorXd n = Eigen::VectorXd::Zero(dim);
    n.head<3>() = r.row.normal;
    if (r.kind == RowKind::Visual) n[3 + slot++] = 1.0 / scale;
    cons.push_back({std::move(n), r.row.rhs});
  }
  append_box(cons, box, dim);

  Eigen::VectorXd target = Eigen::VectorXd::Zero(dim);
  target.head<3>() = u_nom.vector();
  qp::Projection p;
  try {
    p = qp::project(target, cons);
  } catch (const InfeasibleQP&) {
    std::ostringstream msg;
    msg << "safety row incompatible with the input box at pose (" << pose.r_x << ", "
        << pose.r_y << ", " << pose.theta << ")";
    throw InfeasibleQP(msg.str());
  }
  out.command = CommandVector::from(clamp_to_box(p.x.head<3>(), box));
  for (int j = 0; j < n_visual; ++j) out.slack_used[j] = std::max(0.0, p.x[3 + j] / scale);
  for (int idx : p.active) out.active_set.push_back(idx);
  out.feasible = false;
  return out;
}

}  // namespace docking
