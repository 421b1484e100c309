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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "docking/errors.hpp"
#include "docking/safety_filter.hpp"
#include "docking/verification.hpp"

namespace docking {
namespace {

const InputBounds kBox;
const SafetyParams kSafety;
const VisionParams kVision;

std::vector<TaggedRow> rows_at(const Pose& p, double half_angle) {
  return {{constraint_row(eval_h1(p, kSafety), 1.0), RowKind::Safety},
          {constraint_row(eval_h2(p, kVision, half_angle), 1.0), RowKind::Visual},
          {constraint_row(eval_h3(p, kVision, half_angle), 1.0), RowKind::Visual}};
}

TEST(NominalTest, Examples) {
  EXPECT_EQ(nominal_control({0.0, 0.0, kPi}, {}), (CommandVector{-0.0, -0.0, -0.0}));
  const CommandVector a = nominal_control({1.0, 0.0, kPi}, {});
  EXPECT_DOUBLE_EQ(a.vbar_x, -0.15);
  EXPECT_EQ(a.omega_z, 0.0);
  EXPECT_NEAR(nominal_control({0.0, 0.0, -kPi / 2}, {}).omega_z, -0.15 * kPi / 2, 1e-15);
}

TEST(SafetyFilterTest, DeepInSafeSetPassesThrough) {
  const Pose p{2.0, 0.0, kPi};
  const CommandVector u{-0.01, 0.0, 0.0};
  const FilterResult r = safety_filter(p, u, rows_at(p, kVision.theta_v), kBox);
  EXPECT_EQ(r.command, u);
  EXPECT_TRUE(r.active_set.empty());
  EXPECT_TRUE(r.feasible);
  for (double s : r.slack_used) EXPECT_EQ(s, 0.0);
}

TEST(SafetyFilterTest, CardioidBoundaryHolds) {
  // (0, 2a) lies on the boundary; heading at the port keeps the cone satisfied
  const Pose p{0.0, 1.5, -kPi / 2};
  ASSERT_NEAR(eval_h1(p, kSafety).value, 0.0, 1e-12);
  const CommandVector into{-0.3, -0.3, 0.0};
  const auto rows = rows_at(p, kVision.theta_v);
  const FilterResult r = safety_filter(p, into, rows, kBox);
  EXPECT_GE(rows[0].row.normal.dot(r.command.vector()), -1e-12);
  EXPECT_LT(rows[0].row.normal.dot(into.vector()), 0.0);
  EXPECT_TRUE(kBox.contains(r.command));
}

TEST(SafetyFilterTest, ControlSharingOnSampledPoses) {
  const auto res = verify::control_sharing_suite(5000, 9);
  EXPECT_TRUE(res.passed) << res.detail;
}

TEST(SafetyFilterTest, AcquisitionRowsFeasible) {
  const auto res = verify::acquisition_feasibility_suite(5000, 9);
  EXPECT_TRUE(res.passed) << res.detail;
}

TEST(SafetyFilterTest, SlackOnlyOnVisualRows) {
  // the narrow cone cannot be re-entered within one tick at full angle error
  const Pose p{2.0, 0.0, kPi - 1.5};
  const auto rows = rows_at(p, kVision.theta_v_bar);
  EXPECT_THROW(solve_qp({0, 0, 0}, std::vector<HalfSpace>{rows[0].row, rows[1].row, rows[2].row},
                        kBox),
               InfeasibleQP);
  const FilterResult r = safety_filter(p, {0, 0, 0}, rows, kBox);
  EXPECT_FALSE(r.feasible);
  ASSERT_EQ(r.slack_used.size(), 2u);
  EXPECT_GT(r.slack_used[0] + r.slack_used[1], 0.0);
  EXPECT_TRUE(kBox.contains(r.command));
  EXPECT_GE(rows[0].row.residual(r.command.vector()), -1e-12);
  // the heavily weighted slack drives the rotation to its bound
  EXPECT_NEAR(std::abs(r.command.omega_z), kBox.ang_bound, 1e-9);
}

TEST(SafetyFilterTest, SafetyRowIsNeverRelaxed) {
  const Pose p{1.0, 0.0, kPi};
  std::vector<TaggedRow> rows{{HalfSpace{Eigen::Vector3d(1, 0, 0), 2.0}, RowKind::Safety},
                              {HalfSpace{Eigen::Vector3d(0, 0, 1), 5.0}, RowKind::Visual}};
  EXPECT_THROW(safety_filter(p, {0, 0, 0}, rows, kBox), InfeasibleQP);
}

TEST(InputBoundsTest, ContainsAndValidate) {
  EXPECT_TRUE(kBox.contains({0.5, -0.5, 0.5}));
  EXPECT_FALSE(kBox.contains({0.5, -0.5, 0.5000001}));
  EXPECT_THROW((InputBounds{0.0, 0.5}.validate()), ConfigError);
}

}  // namespace
}  // namespace docking
