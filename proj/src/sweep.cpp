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

#include "docking/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "docking/errors.hpp"

namespace docking {

std::vector<std::pair<ScenarioConfig, std::vector<std::pair<std::string, double>>>> expand_sweep(
    const ScenarioConfig& base, const SweepSpec& spec) {
  using Settings = std::vector<std::pair<std::string, double>>;
  std::vector<std::pair<ScenarioConfig, Settings>> points{{base, {}}};
  for (const GridAxis& axis : spec.grid) {
    std::vector<std::pair<ScenarioConfig, Settings>> next;
    for (const auto& [cfg, settings] : points) {
      for (double v : axis.values) {
        ScenarioConfig c = cfg;
        std::ostringstream text;
        text.precision(17);
        text << v;
        apply_override(c, axis.key, text.str());
        Settings s = settings;
        s.emplace_back(axis.key, v);
        next.emplace_back(std::move(c), std::move(s));
      }
    }
    points = std::move(next);
  }
  if (spec.grid.empty() && spec.random_samples == 0) return {};
  if (spec.random_samples == 0) return points;

  Rng rng(spec.seed);
  std::vector<std::pair<ScenarioConfig, Settings>> out;
  for (const auto& [cfg, settings] : points) {
    for (int i = 0; i < spec.random_samples; ++i) {
      const Pose p = sample_start(rng, spec.start, spec.r_min, spec.r_max, cfg.safety, cfg.vision);
      ScenarioConfig c = cfg;
      c.initial_state = SliderState{p.r_x, p.r_y, p.theta, 0.0, 0.0, 0.0};
      Settings s = settings;
      s.emplace_back("r_x", p.r_x);
      s.emplace_back("r_y", p.r_y);
      s.emplace_back("theta", p.theta);
      out.emplace_back(std::move(c), std::move(s));
    }
  }
  return out;
}

std::vector<SweepRun> sweep(const ScenarioConfig& base, const SweepSpec& spec) {
  const auto scenarios = expand_sweep(base, spec);
  std::vector<SweepRun> runs(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) {
      SweepRun& run = runs[i];
      run.index = static_cast<int>(i);
      run.settings = scenarios[i].second;
      try {
        ScenarioResult res = run_scenario(scenarios[i].first);
        run.metrics = res.metrics;
        run.termination = res.log.termination;
        run.path_length = path_length(res.log);
        run.error = res.log.diagnostic;
      } catch (const std::exception& e) {
        run.error = e.what();
      }
    }
  };
  unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, scenarios.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();  // join before handing results back
  return runs;
}

GridAxis parse_grid_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("grid axis '" + text + "' is not key=v1,v2,...");
  GridAxis axis;
  axis.key = text.substr(0, eq);
  ScenarioConfig probe;
  get_value(probe, axis.key);  // rejects unknown keys
  std::stringstream rest(text.substr(eq + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    apply_override(probe, axis.key, item);  // validates the number format
    axis.values.push_back(get_value(probe, axis.key));
  }
  return axis;
}

}  // namespace docking
