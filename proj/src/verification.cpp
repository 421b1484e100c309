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

#include "docking/verification.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "docking/errors.hpp"
#include "docking/inner_loop.hpp"

namespace docking::verify {
namespace {

std::vector<HalfSpace> with_box(const QpInstance& q) {
  std::vector<HalfSpace> all = q.rows;
  const double bound[3] = {q.box.lin_bound, q.box.lin_bound, q.box.ang_bound};
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d e = Eigen::Vector3d::Unit(i);
    all.push_back({e, -bound[i]});
    all.push_back({-e, -bound[i]});
  }
  return all;
}

bool feasible(const std::vector<HalfSpace>& all, const Eigen::Vector3d& u, double tol) {
  return std::all_of(all.begin(), all.end(),
                     [&](const HalfSpace& h) { return h.residual(u) >= -tol; });
}

std::string format(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

}  // namespace

QpInstance random_qp_instance(Rng& rng, bool force_feasible) {
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 3);
  QpInstance q;
  q.u_nom = {sym(rng), sym(rng), sym(rng)};
  q.box = {0.2 + 0.8 * unit(rng), 0.2 + 0.8 * unit(rng)};
  const Eigen::Vector3d anchor(q.box.lin_bound * sym(rng), q.box.lin_bound * sym(rng),
                               q.box.ang_bound * sym(rng));
  const int m = count(rng);
  for (int i = 0; i < m; ++i) {
    Eigen::Vector3d g(sym(rng), sym(rng), sym(rng));
    if (g.norm() < 1e-3) g = Eigen::Vector3d::UnitX();
    g *= (0.1 + 2.9 * unit(rng)) / g.norm();
    const double rhs = force_feasible ? g.dot(anchor) - 0.5 * unit(rng) * g.norm()
                                      : sym(rng) * g.norm();
    q.rows.push_back({g, rhs});
  }
  return q;
}

double max_row_violation(const QpInstance& q, const CommandVector& u) {
  double worst = 0.0;
  for (const HalfSpace& h : with_box(q)) worst = std::max(worst, -h.residual(u.vector()));
  return worst;
}

std::optional<double> projection_enumeration_objective(const QpInstance& q) {
  const std::vector<HalfSpace> all = with_box(q);
  const int m = static_cast<int>(all.size());
  const Eigen::Vector3d u0 = q.u_nom.vector();
  std::optional<double> best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > 3) continue;
    Eigen::Vector3d u = u0;
    if (k > 0) {
      Eigen::MatrixXd a(k, 3);
      Eigen::VectorXd b(k);
      for (int i = 0, r = 0; i < m; ++i) {
        if (!(mask & (1u << i))) continue;
        a.row(r) = all[i].normal.transpose();
        b[r++] = all[i].rhs;
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(a * a.transpose());
      lu.setThreshold(1e-10);
      if (!lu.isInvertible()) continue;
      u += a.transpose() * lu.solve(b - a * u0);
    }
    if (!feasible(all, u, 1e-9)) continue;
    const double obj = (u - u0).squaredNorm();
    if (!best || obj < *best) best = obj;
  }
  return best;
}

std::optional<double> grid_refinement_objective(const QpInstance& q, int levels,
                                                int points_per_axis) {
  const std::vector<HalfSpace> all = with_box(q);
  const Eigen::Vector3d lo(-q.box.lin_bound, -q.box.lin_bound, -q.box.ang_bound);
  const Eigen::Vector3d hi = -lo;
  const Eigen::Vector3d u0 = q.u_nom.vector();
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d half = hi;
  std::optional<double> best;
  for (int level = 0; level < levels; ++level) {
    Eigen::Vector3d incumbent = center;
    const Eigen::Vector3d start = (center - half).cwiseMax(lo);
    const Eigen::Vector3d stop = (center + half).cwiseMin(hi);
    const Eigen::Vector3d spacing = (stop - start) / (points_per_axis - 1);
    for (int i = 0; i < points_per_axis; ++i)
      for (int j = 0; j < points_per_axis; ++j)
        for (int k = 0; k < points_per_axis; ++k) {
          const Eigen::Vector3d u = start + Eigen::Vector3d(i * spacing.x(), j * spacing.y(),
                                                            k * spacing.z());
          if (!feasible(all, u, 0.0)) continue;
          const double obj = (u - u0).squaredNorm();
          if (!best || obj < *best) {
            best = obj;
            incumbent = u;
          }
        }
    center = incumbent;
    half = 2.0 * spacing;
  }
  return best;
}

TrackingReport inner_loop_step(VelocityChannel channel, double step, const InnerLoopGains& gains,
                               const RigidBodyParams& params, double physics_dt,
                               double fit_horizon, double duration) {
  BodyVelocityCommand cmd;
  double rate = 0.0;
  switch (channel) {
    case VelocityChannel::Vx:
      cmd.v_x_d = step;
      rate = gains.c1;
      break;
    case VelocityChannel::Vy:
      cmd.v_y_d = step;
      rate = gains.c2;
      break;
    case VelocityChannel::OmegaZ:
      cmd.omega_z_d = step;
      rate = gains.c3;
      break;
  }
  auto error_of = [&](const SliderState& s) {
    switch (channel) {
      case VelocityChannel::Vx:
        return s.v_x - cmd.v_x_d;
      case VelocityChannel::Vy:
        return s.v_y - cmd.v_y_d;
      case VelocityChannel::OmegaZ:
        return s.omega_z - cmd.omega_z_d;
    }
    return 0.0;
  };

  SliderState s{1.0, -0.5, 0.3, 0.0, 0.0, 0.0};
  const WrenchLaw law = [&](const SliderState& x) { return compute_wrench(x, cmd, gains, params); };
  const double e0 = error_of(s);
  TrackingReport rep;
  const long steps = std::lround(duration / physics_dt);
  for (long k = 0; k <= steps; ++k) {
    const double t = k * physics_dt;
    const double e = error_of(s);
    if (t <= fit_horizon + 1e-12) {
      const double ideal = e0 * std::exp(-rate * t);
      rep.worst_relative_deviation = std::max(rep.worst_relative_deviation, std::abs(e / ideal - 1.0));
    }
    if (std::abs(e) >= 0.01 * std::abs(step)) rep.settle_time = t + physics_dt;
    rep.final_error = e;
    if (k < steps) s = step_rk4(s, law, params, physics_dt);
  }
  return rep;
}

SuiteResult gradient_suite(long samples, std::uint64_t seed, double tolerance) {
  Rng rng(seed);
  const SafetyParams sp;
  const VisionParams vp;
  SuiteResult r{"gradient oracle", true, samples, 0.0, {}};
  for (long i = 0; i < samples; ++i) {
    Pose p;
    do p = sample_pose(rng, 0.0, 5.0);
    while (!(p.range() > vp.epsilon_dock));
    r.worst = std::max(r.worst, check_gradients(p, 1e-6, sp, vp));
  }
  r.passed = r.worst < tolerance;
  r.detail = "worst relative error " + format(r.worst) + " (limit " + format(tolerance) + ")";
  return r;
}

SuiteResult qp_oracle_suite(long samples, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r{"qp exactness", true, samples, 0.0, {}};
  double worst_violation = 0.0;
  long mismatched_verdicts = 0;
  long grid_beats_solver = 0;
  long not_idempotent = 0;
  long idempotence_checks = 0;
  for (long i = 0; i < samples; ++i) {
    const QpInstance q = random_qp_instance(rng, i % 5 != 4);
    const auto oracle = projection_enumeration_objective(q);
    std::optional<CommandVector> u;
    try {
      u = solve_qp(q.u_nom, q.rows, q.box);
    } catch (const InfeasibleQP&) {
    }
    if (oracle.has_value() != u.has_value()) {
      ++mismatched_verdicts;
      continue;
    }
    if (!u) continue;
    const double obj = (u->vector() - q.u_nom.vector()).squaredNorm();
    r.worst = std::max(r.worst, std::abs(obj - *oracle));
    worst_violation = std::max(worst_violation, max_row_violation(q, *u));
    if (const auto grid = grid_refinement_objective(q, 6, 11); grid && *grid < obj - 1e-9)
      ++grid_beats_solver;
    // Feeding the minimizer back in must return it untouched.
    QpInstance again = q;
    again.u_nom = *u;
    if (max_row_violation(again, *u) == 0.0) {
      ++idempotence_checks;
      if (!(solve_qp(*u, q.rows, q.box) == *u)) ++not_idempotent;
    }
    // A nominal command that already satisfies every row comes back as is.
    const CommandVector inside = CommandVector::from(0.5 * (u->vector() + q.u_nom.vector()));
    again.u_nom = inside;
    if (max_row_violation(again, inside) == 0.0) {
      ++idempotence_checks;
      if (!(solve_qp(inside, q.rows, q.box) == inside)) ++not_idempotent;
    }
  }
  r.passed = mismatched_verdicts == 0 && grid_beats_solver == 0 && not_idempotent == 0 &&
             r.worst <= 1e-6 && worst_violation <= 1e-9;
  r.detail = "max |obj - oracle| " + format(r.worst) + ", max violation " + format(worst_violation) +
             ", verdict mismatches " + std::to_string(mismatched_verdicts) + ", grid beats solver " +
             std::to_string(grid_beats_solver) + ", non-idempotent " + std::to_string(not_idempotent) + " of " +
             std::to_string(idempotence_checks);
  return r;
}

SuiteResult cone_complement_suite(long samples, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> half(1e-6, kPi / 2.0 - 1e-6);
  const VisionParams vp;
  SuiteResult r{"cone complement", true, samples, std::numeric_limits<double>::infinity(), {}};
  long both_negative = 0;
  for (long i = 0; i < samples; ++i) {
    Pose p;
    do p = sample_pose(rng, 0.0, 5.0);
    while (!(p.range() > vp.epsilon_dock));
    const double ha = half(rng);
    const double h2 = eval_h2(p, vp, ha).value;
    const double h3 = eval_h3(p, vp, ha).value;
    if (h2 < 0.0 && h3 < 0.0) ++both_negative;
    r.worst = std::min(r.worst, std::max(h2, h3));
  }
  r.passed = both_negative == 0;
  r.detail = std::to_string(both_negative) + " poses with h2 < 0 and h3 < 0; smallest max(h2, h3) " +
             format(r.worst);
  return r;
}

SuiteResult cardioid_identity_suite(long samples, std::uint64_t seed) {
  Rng rng(seed);
  const SafetyParams sp;
  std::uniform_real_distribution<double> radius(0.0, 6.0 * sp.cardioid_a);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  SuiteResult r{"cardioid identity", true, samples, 0.0, {}};
  long disagreements = 0;
  auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
  for (long i = 0; i < samples; ++i) {
    double rad = 0.0;
    do rad = radius(rng);
    while (rad <= 0.0);
    const double phi = angle(rng);
    const Pose p{rad * std::cos(phi), rad * std::sin(phi), 0.0};
    const double polar = rad - 2.0 * sp.cardioid_a * (1.0 - std::cos(phi));
    if (sign(eval_h1(p, sp).value) != sign(polar)) ++disagreements;
  }
  r.worst = static_cast<double>(disagreements);
  r.passed = disagreements == 0;
  r.detail = std::to_string(disagreements) + " sign disagreements";
  return r;
}

SuiteResult control_sharing_suite(long samples, std::uint64_t seed) {
  Rng rng(seed);
  const SafetyParams sp;
  const VisionParams vp;
  const BarrierGains k;
  const NominalGains p;
  const InputBounds box;
  SuiteResult r{"control sharing", true, samples, 0.0, {}};
  long failures = 0;
  for (long i = 0; i < samples; ++i) {
    const Pose pose = sample_start(rng, StartKind::Locked, vp.epsilon_dock * (1.0 + 1e-9), 5.0, sp, vp);
    const std::vector<TaggedRow> rows = {
        {constraint_row(eval_h1(pose, sp), k.k1), RowKind::Safety},
        {constraint_row(eval_h2(pose, vp, vp.theta_v), k.k2), RowKind::Visual},
        {constraint_row(eval_h3(pose, vp, vp.theta_v), k.k3), RowKind::Visual},
    };
    try {
      const FilterResult f = safety_filter(pose, nominal_control(pose, p), rows, box);
      double violation = 0.0;
      for (const TaggedRow& row : rows) violation = std::max(violation, -row.row.residual(f.command.vector()));
      r.worst = std::max(r.worst, violation);
      const bool zero_slack = std::all_of(f.slack_used.begin(), f.slack_used.end(),
                                          [](double s) { return s == 0.0; });
      if (!f.feasible || !zero_slack || violation > 1e-9 || !box.contains(f.command)) ++failures;
    } catch (const InfeasibleQP&) {
      ++failures;
    }
  }
  r.passed = failures == 0;
  r.detail = std::to_string(failures) + " poses needed slack or failed; max row violation " +
             format(r.worst);
  return r;
}

SuiteResult acquisition_feasibility_suite(long samples, std::uint64_t seed) {
  Rng rng(seed);
  const SafetyParams sp;
  const VisionParams vp;
  const BarrierGains k;
  const InputBounds box;
  // Depth of the sampled violation: the feasibility domain of the lower cone
  // barrier is h2 > -b1 with k2 * b1 < min(lin_bound, ang_bound).
  const double b1 = 0.99 * std::min(box.lin_bound, box.ang_bound) / k.k2;
  std::uniform_real_distribution<double> depth(0.0, b1);
  SuiteResult r{"acquisition feasibility", true, samples, 0.0, {}};
  long failures = 0;
  for (long i = 0; i < samples; ++i) {
    Pose pose;
    do pose = sample_pose(rng, vp.epsilon_dock * (1.0 + 1e-9), 5.0);
    while (!(eval_h1(pose, sp).value > 0.0));
    const double h2_target = -depth(rng) - 1e-12;
    const double bearing = std::atan2(-pose.r_y, -pose.r_x);
    pose.theta = wrap_angle(bearing - (h2_target - vp.theta_v));
    const BarrierEvaluation h2 = eval_h2(pose, vp, vp.theta_v);
    const HalfSpace rows[] = {constraint_row(eval_h1(pose, sp), k.k1), constraint_row(h2, k.k2)};
    try {
      const CommandVector u = solve_qp(CommandVector{}, rows, box);
      double violation = 0.0;
      for (const HalfSpace& row : rows) violation = std::max(violation, -row.residual(u.vector()));
      r.worst = std::max(r.worst, violation);
      if (violation > 1e-9) ++failures;
    } catch (const InfeasibleQP&) {
      ++failures;
    }
  }
  r.passed = failures == 0;
  r.detail = std::to_string(failures) + " infeasible with h2 in (-" + format(b1) + ", 0)";
  return r;
}

}  // namespace docking::verify
