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
#include <limits>

#include <gtest/gtest.h>

#include "docking/angle.hpp"
#include "docking/errors.hpp"
#include "docking/rigid_body.hpp"

namespace docking {
namespace {

const RigidBodyParams kParams;

TEST(RigidBodyTest, ConstantForceMatchesClosedForm) {
  const SliderState s0{0.3, -0.2, 0.7, 0.0, 0.0, 0.0};
  const Wrench w{2.0, -1.0, 0.0};
  SliderState s = s0;
  const double dt = 0.001;
  for (int i = 0; i < 1000; ++i) s = step_rk4(s, w, kParams, dt);
  const double t = 1.0;
  const double ax = w.f_x / kParams.mass, ay = w.f_y / kParams.mass;
  const double c = std::cos(s0.theta), sn = std::sin(s0.theta);
  EXPECT_NEAR(s.v_x, ax * t, 1e-9);
  EXPECT_NEAR(s.v_y, ay * t, 1e-9);
  EXPECT_NEAR(s.r_x, s0.r_x + 0.5 * t * t * (c * ax - sn * ay), 1e-9);
  EXPECT_NEAR(s.r_y, s0.r_y + 0.5 * t * t * (sn * ax + c * ay), 1e-9);
  EXPECT_DOUBLE_EQ(s.theta, s0.theta);
}

TEST(RigidBodyTest, ConstantTorqueFromRest) {
  SliderState s;
  const Wrench w{0.0, 0.0, 0.011};
  for (int i = 0; i < 500; ++i) s = step_rk4(s, w, kParams, 0.001);
  const double t = 0.5, alpha = w.tau_z / kParams.inertia_zz;
  EXPECT_NEAR(s.omega_z, alpha * t, 1e-9);
  EXPECT_NEAR(s.theta, 0.5 * alpha * t * t, 1e-9);
  EXPECT_EQ(s.r_x, 0.0);
  EXPECT_EQ(s.v_y, 0.0);
}

TEST(RigidBodyTest, UnitForceForOneSecond) {
  SliderState s;
  for (int i = 0; i < 1000; ++i) s = step_rk4(s, Wrench{4.82, 0.0, 0.0}, kParams, 0.001);
  EXPECT_NEAR(s.v_x, 1.0, 1e-9);
  SliderState r;
  for (int i = 0; i < 1000; ++i) r = step_rk4(r, Wrench{0.0, 0.0, 0.11}, kParams, 0.001);
  EXPECT_NEAR(r.omega_z, 1.0, 1e-9);
}

TEST(RigidBodyTest, DerivativeExamples) {
  EXPECT_EQ(full_dynamics(SliderState{}, Wrench{}, kParams), SliderStateDerivative{});
  EXPECT_EQ(full_dynamics(SliderState{0, 0, 0, 1, 0, 0}, Wrench{}, kParams),
            (SliderStateDerivative{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(full_dynamics(SliderState{0, 0, 0, 0, 1, 1}, Wrench{}, kParams),
            (SliderStateDerivative{0, 1, 1, 1, 0, 0}));
}

TEST(RigidBodyTest, ZeroStepReturnsStateUnchanged) {
  const SliderState s{1.0, 2.0, 0.5, 0.1, -0.2, 0.3};
  EXPECT_EQ(step_rk4(s, Wrench{1.0, 1.0, 1.0}, kParams, 0.0), s);
}

TEST(RigidBodyTest, NegativeStepRejected) {
  EXPECT_THROW(step_rk4(SliderState{}, Wrench{}, kParams, -1e-3), std::invalid_argument);
}

TEST(RigidBodyTest, NonFiniteInputRejected) {
  SliderState s;
  s.v_x = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(full_dynamics(s, Wrench{}, kParams), NonFiniteError);
  EXPECT_THROW(step_rk4(SliderState{}, Wrench{std::numeric_limits<double>::infinity(), 0, 0},
                        kParams, 1e-3),
               NonFiniteError);
}

TEST(RigidBodyTest, InvalidParamsRejected) {
  EXPECT_THROW((RigidBodyParams{-1.0, 0.11}.validate()), ConfigError);
  EXPECT_THROW((RigidBodyParams{4.82, 0.0}.validate()), ConfigError);
  EXPECT_NO_THROW(kParams.validate());
}

TEST(RigidBodyTest, CoriolisTermsInDerivative) {
  const SliderState s{0.0, 0.0, 0.0, 0.2, -0.1, 0.5};
  const auto d = full_dynamics(s, Wrench{}, kParams);
  EXPECT_DOUBLE_EQ(d.v_x, 0.5 * -0.1);
  EXPECT_DOUBLE_EQ(d.v_y, -0.5 * 0.2);
  EXPECT_DOUBLE_EQ(d.theta, 0.5);
}

double kinetic_energy(const SliderState& s) {
  return 0.5 * kParams.mass * (s.v_x * s.v_x + s.v_y * s.v_y) +
         0.5 * kParams.inertia_zz * s.omega_z * s.omega_z;
}

TEST(RigidBodyTest, ForceFreeMotionConservesEnergy) {
  SliderState s{0.0, 0.0, 0.0, 0.3, -0.2, 0.8};
  const double e0 = kinetic_energy(s);
  for (int i = 0; i < 10000; ++i) s = step_rk4(s, Wrench{}, kParams, 0.001);
  EXPECT_NEAR(kinetic_energy(s), e0, 1e-8);
}

// force free: the inertial velocity is constant, so the path is a straight line
SliderState drift(double dt, int steps) {
  SliderState s{0.0, 0.0, 0.2, 0.4, 0.1, 2.0};
  for (int i = 0; i < steps; ++i) s = step_rk4(s, Wrench{}, kParams, dt);
  return s;
}

TEST(RigidBodyTest, FourthOrderConvergence) {
  const SliderState s0{0.0, 0.0, 0.2, 0.4, 0.1, 2.0};
  const Eigen::Vector2d v = body_to_inertial({s0.v_x, s0.v_y}, s0.theta);
  auto err = [&](double dt, int steps) {
    const SliderState s = drift(dt, steps);
    const double t = dt * steps;
    return std::hypot(s.r_x - v.x() * t, s.r_y - v.y() * t);
  };
  const double ratio = err(0.1, 10) / err(0.05, 20);
  EXPECT_GT(ratio, 14.0);
  EXPECT_LT(ratio, 18.0);
}

TEST(RigidBodyTest, HeadingWrapsContinuously) {
  SliderState s{0.0, 0.0, 3.0, 0.0, 0.0, 1.0};
  double prev = s.theta;
  bool crossed = false;
  for (int i = 0; i < 1000; ++i) {
    s = step_rk4(s, Wrench{}, kParams, 0.001);
    EXPECT_GT(s.theta, -kPi);
    EXPECT_LE(s.theta, kPi);
    EXPECT_NEAR(wrap_angle(s.theta - prev), 0.001, 1e-12);
    if (s.theta < prev) crossed = true;
    prev = s.theta;
  }
  EXPECT_TRUE(crossed);
}

TEST(RigidBodyTest, FrameRotationRoundTrip) {
  const Eigen::Vector2d v{0.3, -0.7};
  const Eigen::Vector2d w = body_to_inertial(v, 1.1);
  EXPECT_NEAR((inertial_to_body(w, 1.1) - v).norm(), 0.0, 1e-15);
  const Eigen::Vector2d e = body_to_inertial({1.0, 0.0}, kPi / 2);
  EXPECT_NEAR(e.x(), 0.0, 1e-15);
  EXPECT_NEAR(e.y(), 1.0, 1e-15);
}

}  // namespace
}  // namespace docking
