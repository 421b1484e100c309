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

#include "docking/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "docking/errors.hpp"

namespace docking {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Docked:
      return "docked";
    case Termination::TimeLimit:
      return "time_limit";
    case Termination::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void log_barriers(TrajectoryRecord& rec, const ScenarioConfig& c) {
  rec.h1 = eval_h1(rec.pose, c.safety).value;
  if (rec.pose.range() > c.vision.epsilon_dock) {
    rec.h2 = eval_h2(rec.pose, c.vision, c.vision.theta_v).value;
    rec.h3 = eval_h3(rec.pose, c.vision, c.vision.theta_v).value;
  } else {
    rec.h2 = kNaN;
    rec.h3 = kNaN;
  }
}

std::vector<TaggedRow> barrier_rows(const Pose& pose, const SupervisorDecision& d,
                                    const ScenarioConfig& c) {
  std::vector<TaggedRow> rows;
  if (d.safety_row)
    rows.push_back({constraint_row(eval_h1(pose, c.safety), c.barrier_gains.k1), RowKind::Safety});
  if (d.visual_rows) {
    rows.push_back({constraint_row(eval_h2(pose, c.vision, d.half_angle), c.barrier_gains.k2),
                    RowKind::Visual});
    rows.push_back({constraint_row(eval_h3(pose, c.vision, d.half_angle), c.barrier_gains.k3),
                    RowKind::Visual});
  }
  return rows;
}

bool locked_at(const TrajectoryRecord& r) {
  return !std::isnan(r.h2) && r.h2 >= 0.0 && r.h3 >= 0.0;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& config) {
  config.validate();
  const int substeps = config.physics_steps_per_tick();

  TrajectoryLog log;
  SliderState state = config.initial_state;
  state.theta = wrap_angle(state.theta);
  SupervisorMode mode = SupervisorMode::Locked;

  for (long tick = 0;; ++tick) {
    const double t = static_cast<double>(tick) * config.control_dt;
    TrajectoryRecord rec;
    rec.t = t;
    rec.state = state;
    rec.pose = pose_of(state);
    log_barriers(rec, config);

    const SupervisorDecision decision = update(rec.pose, mode, config.vision, config.tolerances);
    if (decision.mode != mode) log.transitions.push_back({t, mode, decision.mode});
    mode = decision.mode;
    rec.mode = mode;

    if (mode == SupervisorMode::Docked) {
      rec.wrench = compute_wrench(state, rec.body_command, config.inner_gains, config.rigid_body);
      log.records.push_back(std::move(rec));
      log.termination = Termination::Docked;
      break;
    }

    const std::vector<TaggedRow> rows = barrier_rows(rec.pose, decision, config);
    const CommandVector u_nom = nominal_control(rec.pose, config.nominal_gains);
    FilterResult filtered;
    try {
      filtered = safety_filter(rec.pose, u_nom, rows, config.input_bounds);
    } catch (const InfeasibleQP& e) {
      log.termination = Termination::Infeasible;
      log.diagnostic = "t=" + std::to_string(t) + ": " + e.what();
      log.records.push_back(std::move(rec));
      break;
    }

    rec.command = filtered.command;
    rec.relaxed = !filtered.feasible;
    double slack2 = 0.0;
    for (double s : filtered.slack_used) slack2 += s * s;
    rec.slack = std::sqrt(slack2);
    rec.active_set = std::move(filtered.active_set);

    const Eigen::Vector2d vbar(filtered.command.vbar_x, filtered.command.vbar_y);
    const double omega_d = filtered.command.omega_z;
    rec.body_command = body_reference(state, vbar, omega_d);
    rec.wrench = track_inertial_command(state, vbar, omega_d, config.inner_gains, config.rigid_body);
    log.records.push_back(std::move(rec));

    if (t >= config.t_max - 0.5 * config.control_dt) {
      log.termination = Termination::TimeLimit;
      break;
    }

    // The inertial command is held over the tick; the body-frame reference
    // follows the heading inside the substeps.
    const WrenchLaw law = [&](const SliderState& x) {
      return track_inertial_command(x, vbar, omega_d, config.inner_gains, config.rigid_body);
    };
    for (int k = 0; k < substeps; ++k) state = step_rk4(state, law, config.rigid_body, config.physics_dt);
  }

  ScenarioResult out;
  out.metrics = compute_metrics(log);
  out.log = std::move(log);
  return out;
}

RunMetrics compute_metrics(const TrajectoryLog& log) {
  RunMetrics m;
  constexpr double inf = std::numeric_limits<double>::infinity();
  m.min_h1 = m.min_h2 = m.min_h3 = inf;
  for (const TrajectoryRecord& r : log.records) {
    m.min_h1 = std::min(m.min_h1, r.h1);
    if (!std::isnan(r.h2)) {
      m.min_h2 = std::min(m.min_h2, r.h2);
      m.min_h3 = std::min(m.min_h3, r.h3);
    }
    if (r.relaxed) ++m.qp_infeasible_count;
  }
  if (log.termination == Termination::Infeasible) ++m.qp_infeasible_count;

  if (!log.records.empty()) {
    if (locked_at(log.records.front())) {
      m.time_to_lock = 0.0;
    } else {
      const auto it = std::find_if(log.records.begin(), log.records.end(), locked_at);
      if (it != log.records.end()) m.time_to_lock = it->t;
    }
    const Pose& last = log.records.back().pose;
    m.final_position_error = last.range();
    m.final_heading_error = std::abs(wrap_angle(last.theta - kPi));
  }
  m.docked = log.termination == Termination::Docked;
  return m;
}

std::optional<LockedSegment> locked_segment(const TrajectoryLog& log, const RunMetrics& metrics) {
  if (!metrics.time_to_lock) return std::nullopt;
  LockedSegment seg;
  seg.min_h2 = seg.min_h3 = std::numeric_limits<double>::infinity();
  for (const TrajectoryRecord& r : log.records) {
    if (r.t < *metrics.time_to_lock) continue;
    if (!std::isnan(r.h2)) {
      seg.min_h2 = std::min(seg.min_h2, r.h2);
      seg.min_h3 = std::min(seg.min_h3, r.h3);
    }
    seg.max_slack = std::max(seg.max_slack, r.slack);
  }
  return seg;
}

double path_length(const TrajectoryLog& log) {
  double len = 0.0;
  for (std::size_t i = 1; i < log.records.size(); ++i)
    len += std::hypot(log.records[i].pose.r_x - log.records[i - 1].pose.r_x,
                      log.records[i].pose.r_y - log.records[i - 1].pose.r_y);
  return len;
}

}  // namespace docking
