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

#include <optional>
#include <string>
#include <vector>

#include "docking/inner_loop.hpp"
#include "docking/safety_filter.hpp"
#include "docking/sampling.hpp"

namespace docking::verify {

// Oracles and randomized property suites. None of this is used by the
// controller itself; the QP oracles below share no code with qp_solver.

struct QpInstance {
  CommandVector u_nom;
  std::vector<HalfSpace> rows;
  InputBounds box;
};

/// Random instance: u_nom uniform in [-1,1]^3, 1..3 rows with random normals.
/// A feasible instance places its rows so that a random point of the box
/// satisfies them; otherwise the offsets are unconstrained.
QpInstance random_qp_instance(Rng& rng, bool force_feasible);

/// Exact oracle by brute force: projection of u_nom onto the affine hull of
/// every subset of at most three constraints (rows + box faces), keeping the
/// feasible ones (tolerance 1e-9) and returning the smallest objective.
/// Empty when no candidate is feasible.
std::optional<double> projection_enumeration_objective(const QpInstance& q);

/// Dense grid over the box, refined around the incumbent; an upper bound on
/// the optimal objective (empty if no grid point is feasible).
std::optional<double> grid_refinement_objective(const QpInstance& q, int levels = 8,
                                                int points_per_axis = 21);

double max_row_violation(const QpInstance& q, const CommandVector& u);

/// Error between inner-loop velocity error and the ideal exponential.
struct TrackingReport {
  double worst_relative_deviation = 0.0;  // max |e/e_ideal - 1| over [0, fit_horizon]
  double settle_time = 0.0;              // first time |e| < 1% of the step, for good
  double final_error = 0.0;
};

enum class VelocityChannel { Vx, Vy, OmegaZ };

/// Steps one commanded body velocity by `step` from rest and simulates the
/// inner loop alone at physics_dt.
TrackingReport inner_loop_step(VelocityChannel channel, double step, const InnerLoopGains& gains,
                               const RigidBodyParams& params, double physics_dt,
                               double fit_horizon, double duration);

struct SuiteResult {
  std::string name;
  bool passed = false;
  long samples = 0;
  double worst = 0.0;  // suite-specific statistic, see detail
  std::string detail;
};

SuiteResult gradient_suite(long samples, std::uint64_t seed, double tolerance = 1e-5);
SuiteResult qp_oracle_suite(long samples, std::uint64_t seed);
SuiteResult cone_complement_suite(long samples, std::uint64_t seed);
SuiteResult cardioid_identity_suite(long samples, std::uint64_t seed);
SuiteResult control_sharing_suite(long samples, std::uint64_t seed);
SuiteResult acquisition_feasibility_suite(long samples, std::uint64_t seed);

}  // namespace docking::verify
