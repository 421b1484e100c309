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

#include <gtest/gtest.h>

#include "docking/inner_loop.hpp"
#include "docking/verification.hpp"

namespace docking {
namespace {

const RigidBodyParams kParams;
const InnerLoopGains kGains;

TEST(InnerLoopTest, ZeroStateZeroWrench) {
  EXPECT_EQ(compute_wrench(SliderState{}, BodyVelocityCommand{}, kGains, kParams), Wrench{});
}

TEST(InnerLoopTest, CoriolisCancellation) {
  const SliderState s{0, 0, 0, 0, 1, 1};
  const Wrench w = compute_wrench(s, BodyVelocityCommand{0, 1, 1}, kGains, kParams);
  EXPECT_DOUBLE_EQ(w.f_x, -4.82);
}

TEST(InnerLoopTest, ProportionalTerm) {
  const Wrench w = compute_wrench(SliderState{}, BodyVelocityCommand{0.1, 0, 0}, kGains, kParams);
  EXPECT_NEAR(w.f_x, 9.64, 1e-12);
  EXPECT_EQ(w.f_y, 0.0);
  EXPECT_EQ(w.tau_z, 0.0);
}

TEST(InnerLoopTest, ErrorDynamicsAreLinear) {
  // with the wrench applied, each derivative reduces to -c * error
  const SliderState s{0.4, -1.0, 0.9, 0.2, -0.3, 0.7};
  const BodyVelocityCommand cmd{0.1, 0.05, -0.2};
  const auto d = full_dynamics(s, compute_wrench(s, cmd, kGains, kParams), kParams);
  EXPECT_NEAR(d.v_x, -20.0 * (s.v_x - cmd.v_x_d), 1e-12);
  EXPECT_NEAR(d.v_y, -20.0 * (s.v_y - cmd.v_y_d), 1e-12);
  EXPECT_NEAR(d.omega_z, -20.0 * (s.omega_z - cmd.omega_z_d), 1e-12);
}

TEST(InnerLoopTest, StepResponseIsExponential) {
  for (auto ch : {verify::VelocityChannel::Vx, verify::VelocityChannel::Vy,
                  verify::VelocityChannel::OmegaZ}) {
    const auto rep = verify::inner_loop_step(ch, 0.3, kGains, kParams, 0.001, 0.2, 0.5);
    EXPECT_LT(rep.worst_relative_deviation, 0.02);
    EXPECT_LT(rep.settle_time, 0.25);
    EXPECT_LT(std::abs(rep.final_error), 0.003);
  }
}

TEST(InnerLoopTest, TrackingIgnoresCoriolisMagnitude) {
  // same translational error, very different rotation rates
  auto settle = [](double omega) {
    SliderState s{0, 0, 0, 0.0, 0.5, omega};
    const BodyVelocityCommand cmd{0.3, 0.5, omega};
    for (int i = 0; i < 100; ++i)
      s = step_rk4(
          s, [&](const SliderState& x) { return compute_wrench(x, cmd, kGains, kParams); },
          kParams, 0.001);
    return s.v_x - cmd.v_x_d;
  };
  const double slow = settle(0.0), fast = settle(3.0);
  EXPECT_NEAR(slow, -0.3 * std::exp(-2.0), 1e-6);
  EXPECT_NEAR(fast, slow, 1e-9);
}

TEST(InnerLoopTest, InertialReferenceRotatesWithHeading) {
  const SliderState s{0, 0, std::numbers::pi / 2, 0, 0, 0};
  const auto ref = body_reference(s, {0.2, 0.0}, 0.1);
  EXPECT_NEAR(ref.v_x_d, 0.0, 1e-15);
  EXPECT_NEAR(ref.v_y_d, -0.2, 1e-15);
  EXPECT_EQ(ref.omega_z_d, 0.1);
}

TEST(InnerLoopTest, InertialCommandTrackedWhileTurning) {
  // a constant inertial velocity is held while the body spins
  SliderState s{0, 0, 0, 0, 0, 0};
  const Eigen::Vector2d vbar{0.3, -0.1};
  auto law = [&](const SliderState& x) {
    return track_inertial_command(x, vbar, 0.5, kGains, kParams);
  };
  for (int i = 0; i < 1000; ++i) s = step_rk4(s, law, kParams, 0.001);
  const Eigen::Vector2d v = body_to_inertial({s.v_x, s.v_y}, s.theta);
  EXPECT_NEAR((v - vbar).norm(), 0.0, 1e-7);
  EXPECT_NEAR(s.omega_z, 0.5, 1e-7);
}

TEST(InnerLoopTest, InvalidGainsRejected) {
  EXPECT_THROW((InnerLoopGains{0.0, 20, 20}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace docking
