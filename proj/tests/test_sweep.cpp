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

#include <string>

#include <gtest/gtest.h>

#include "docking/errors.hpp"
#include "docking/sweep.hpp"

namespace docking {
namespace {

const std::string kDir = DOCKING_SCENARIO_DIR;

ScenarioConfig base() { return load_config(kDir + "/case1.cfg"); }

TEST(SweepTest, EmptySpecGivesNoRuns) {
  const SweepSpec spec;
  EXPECT_TRUE(spec.empty());
  EXPECT_TRUE(sweep(base(), spec).empty());
}

TEST(SweepTest, RandomLockedStartsStaySafe) {
  SweepSpec spec;
  spec.random_samples = 100;
  spec.seed = 3;
  const auto runs = sweep(base(), spec);
  ASSERT_EQ(runs.size(), 100u);
  for (const SweepRun& r : runs) {
    ASSERT_TRUE(r.metrics.has_value()) << r.error;
    EXPECT_GE(r.metrics->min_h1, -1e-3) << r.index;
    EXPECT_GE(r.metrics->min_h2, -1e-3) << r.index;
    EXPECT_GE(r.metrics->min_h3, -1e-3) << r.index;
    EXPECT_TRUE(r.metrics->docked) << r.index;
  }
}

TEST(SweepTest, GridOverHeadingGain) {
  SweepSpec spec;
  spec.grid.push_back(parse_grid_axis("p3=0.05,0.15,0.45"));
  const auto runs = sweep(base(), spec);
  ASSERT_EQ(runs.size(), 3u);
  EXPECT_EQ(runs[0].settings.at(0).second, 0.05);
  EXPECT_EQ(runs[2].settings.at(0).second, 0.45);
  for (const SweepRun& r : runs) ASSERT_TRUE(r.metrics.has_value()) << r.error;
}

TEST(SweepTest, GridTimesSamples) {
  SweepSpec spec;
  spec.grid.push_back(parse_grid_axis("cardioid_a=0.5,1.0"));
  spec.random_samples = 2;
  EXPECT_EQ(expand_sweep(base(), spec).size(), 4u);
}

TEST(SweepTest, ReproducibleFromSeedAcrossThreadCounts) {
  SweepSpec spec;
  spec.random_samples = 6;
  spec.start = StartKind::Unlocked;
  spec.seed = 12;
  spec.threads = 1;
  const auto a = sweep(base(), spec);
  spec.threads = 3;
  const auto b = sweep(base(), spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].settings, b[i].settings);
    EXPECT_EQ(a[i].metrics, b[i].metrics);
  }
}

TEST(SweepTest, PerRunErrorsDoNotAbort) {
  SweepSpec spec;
  spec.grid.push_back(parse_grid_axis("mass=4.82,-1"));
  const auto runs = sweep(base(), spec);
  ASSERT_EQ(runs.size(), 2u);
  EXPECT_TRUE(runs[0].metrics.has_value());
  EXPECT_FALSE(runs[1].metrics.has_value());
  EXPECT_FALSE(runs[1].error.empty());
}

TEST(SweepTest, GridAxisParsing) {
  const GridAxis ax = parse_grid_axis("theta_v=pi/15,pi/30");
  EXPECT_EQ(ax.key, "theta_v");
  ASSERT_EQ(ax.values.size(), 2u);
  EXPECT_DOUBLE_EQ(ax.values[1], kPi / 30.0);
  EXPECT_THROW(parse_grid_axis("nokey=1"), ConfigError);
  EXPECT_THROW(parse_grid_axis("p3"), ConfigError);
  EXPECT_THROW(parse_grid_axis("p3=a,b"), ConfigError);
}

}  // namespace
}  // namespace docking
