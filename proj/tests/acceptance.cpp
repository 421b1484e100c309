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

// Acceptance suite at the reference parameter point. One line per criterion;
// the exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "docking/sampling.hpp"
#include "docking/simulation.hpp"
#include "docking/verification.hpp"

namespace {

using namespace docking;

const std::string kDir = DOCKING_SCENARIO_DIR;
constexpr double kTol = 1e-3;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct BoxTally {
  long ticks = 0;
  long outside = 0;
  void add(const TrajectoryLog& log, const InputBounds& box) {
    for (const TrajectoryRecord& r : log.records) {
      ++ticks;
      if (!box.contains(r.command)) ++outside;
    }
  }
};

ScenarioConfig with_start(ScenarioConfig c, const Pose& p) {
  c.initial_state = SliderState{p.r_x, p.r_y, p.theta, 0.0, 0.0, 0.0};
  return c;
}

void locked_starts(BoxTally& box) {
  const ScenarioConfig base = load_config(kDir + "/case1.cfg");
  Rng rng(20261);
  int bad = 0;
  double worst_h1 = INFINITY, worst_h2 = INFINITY, worst_h3 = INFINITY, slowest = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 100; ++i) {
    const Pose p = sample_start(rng, StartKind::Locked, 1.0, 3.0, base.safety, base.vision);
    const ScenarioResult r = run_scenario(with_start(base, p));
    const RunMetrics& m = r.metrics;
    worst_h1 = std::min(worst_h1, m.min_h1);
    worst_h2 = std::min(worst_h2, m.min_h2);
    worst_h3 = std::min(worst_h3, m.min_h3);
    slowest = std::max(slowest, r.log.records.back().t);
    const bool ok = m.docked && m.min_h1 >= -kTol && m.min_h2 >= -kTol && m.min_h3 >= -kTol &&
                    m.final_position_error <= 0.05 && m.final_heading_error <= 0.05 &&
                    r.log.records.back().t <= 120.0;
    if (!ok) ++bad;
    box.add(r.log, base.input_bounds);
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, "invariance from locked starts", bad == 0 && wall < 30.0,
         fmt("100 runs, %d failing, min h1/h2/h3 = %.3g/%.3g/%.3g, slowest dock %.2f s sim, "
             "wall %.1f s",
             bad, worst_h1, worst_h2, worst_h3, slowest, wall));
}

void unlocked_starts(BoxTally& box) {
  const ScenarioConfig base = load_config(kDir + "/case2.cfg");
  Rng rng(20262);
  int bad = 0;
  double worst_h1 = INFINITY, slowest_lock = 0.0;
  for (int i = 0; i < 25; ++i) {
    const Pose p = sample_start(rng, StartKind::Unlocked, 1.0, 3.0, base.safety, base.vision);
    const ScenarioResult r = run_scenario(with_start(base, p));
    const RunMetrics& m = r.metrics;
    const auto& recs = r.log.records;
    bool crossed = false;
    if (m.time_to_lock && *m.time_to_lock > 0.0) {
      // first logged tick with both visual barriers non-negative, after a negative one
      for (std::size_t k = 1; k < recs.size(); ++k) {
        if (recs[k].t != *m.time_to_lock) continue;
        crossed = recs[k].h2 >= 0.0 && recs[k].h3 >= 0.0 &&
                  (recs[k - 1].h2 < 0.0 || recs[k - 1].h3 < 0.0);
        break;
      }
      slowest_lock = std::max(slowest_lock, *m.time_to_lock);
    }
    worst_h1 = std::min(worst_h1, m.min_h1);
    if (!(crossed && m.min_h1 >= -kTol && m.docked)) ++bad;
    box.add(r.log, base.input_bounds);
  }
  report(2, "finite-time lock from unlocked starts", bad == 0,
         fmt("25 runs, %d failing, min h1 = %.3g, slowest lock %.2f s", bad, worst_h1,
             slowest_lock));
}

void inner_loop_tracking() {
  const InnerLoopGains gains;
  const RigidBodyParams params;
  bool ok = true;
  std::string detail;
  const char* names[] = {"v_x", "v_y", "omega_z"};
  int i = 0;
  for (auto ch : {verify::VelocityChannel::Vx, verify::VelocityChannel::Vy,
                  verify::VelocityChannel::OmegaZ}) {
    const auto rep = verify::inner_loop_step(ch, 0.3, gains, params, 0.001, 0.2, 0.5);
    ok = ok && rep.settle_time < 0.25 && rep.worst_relative_deviation < 0.02;
    detail += fmt("%s settles %.3f s, max dev %.2e; ", names[i++], rep.settle_time,
                  rep.worst_relative_deviation);
  }
  report(3, "inner-loop exponential tracking", ok, detail);
}

void from_suite(int id, const std::string& name, const verify::SuiteResult& s) {
  report(id, name, s.passed, fmt("n=%ld, %s", s.samples, s.detail.c_str()));
}

}  // namespace

int main() {
  BoxTally box;
  locked_starts(box);
  unlocked_starts(box);
  inner_loop_tracking();
  from_suite(4, "QP exactness and idempotence", verify::qp_oracle_suite(1000, 4));
  from_suite(5, "barrier gradients vs finite differences", verify::gradient_suite(1000, 5, 1e-5));
  from_suite(6, "control-sharing feasibility", verify::control_sharing_suite(100000, 6));
  from_suite(7, "cardioid polar identity", verify::cardioid_identity_suite(10000, 7));
  report(8, "commands inside the input box", box.outside == 0 && box.ticks > 0,
         fmt("%ld ticks checked, %ld outside", box.ticks, box.outside));
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
