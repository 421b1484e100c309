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

#include "docking/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "docking/errors.hpp"
#include "docking/log_io.hpp"
#include "docking/verification.hpp"

namespace docking::cli {
namespace {

ScenarioConfig load_with_overrides(const std::filesystem::path& path,
                                   const std::vector<std::string>& overrides) {
  ScenarioConfig c = load_config(path);
  for (const std::string& o : overrides) apply_override(c, o);
  c.validate();
  return c;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string opt(const std::optional<double>& v) {
  if (!v) return "none";
  std::ostringstream s;
  s << *v;
  return s.str();
}

void print_metrics(const RunMetrics& m, const TrajectoryLog& log, std::ostream& out) {
  out << "termination: " << to_string(log.termination) << '\n'
      << "min h1/h2/h3: " << m.min_h1 << " / " << m.min_h2 << " / " << m.min_h3 << '\n'
      << "time to lock: " << opt(m.time_to_lock) << " s\n"
      << "final errors: " << m.final_position_error << " m, " << m.final_heading_error << " rad\n"
      << "relaxed ticks: " << m.qp_infeasible_count << '\n';
  if (!log.diagnostic.empty()) out << "diagnostic: " << log.diagnostic << '\n';
}

}  // namespace

int run_verdict(const ScenarioResult& result) {
  const RunMetrics& m = result.metrics;
  if (result.log.termination == Termination::Infeasible) return kExitInfeasible;
  if (!m.docked || m.min_h1 < -kBarrierTolerance || !m.time_to_lock) return kExitPropertyFailure;
  if (*m.time_to_lock == 0.0) {
    const bool clean = m.qp_infeasible_count == 0 && m.min_h2 >= -kBarrierTolerance &&
                       m.min_h3 >= -kBarrierTolerance;
    return clean ? kExitOk : kExitPropertyFailure;
  }
  const auto seg = locked_segment(result.log, m);
  const bool clean = seg && seg->max_slack == 0.0 && seg->min_h2 >= -kBarrierTolerance &&
                     seg->min_h3 >= -kBarrierTolerance;
  return clean ? kExitOk : kExitPropertyFailure;
}

int cmd_run(const std::filesystem::path& config_path, const std::filesystem::path& output_dir,
            const std::vector<std::string>& overrides, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_with_overrides(config_path, overrides);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const ScenarioResult res = run_scenario(config);
    ensure_dir(output_dir);
    write_log_csv(res.log, output_dir / "trajectory.csv");
    write_metrics_json(res.metrics, output_dir / "metrics.json");
    emit_plot_data(res.log, config, output_dir / "plot_data.json");
    print_metrics(res.metrics, res.log, out);
    const int code = run_verdict(res);
    out << (code == kExitOk ? "PASS" : "FAIL") << '\n';
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
}

int cmd_check(long sample_count, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (sample_count <= 0) {
    err << "--samples must be positive\n";
    return kExitUsage;
  }
  using namespace verify;
  const std::vector<SuiteResult> suites = {
      gradient_suite(sample_count, seed),
      qp_oracle_suite(sample_count, seed + 1),
      cone_complement_suite(10 * sample_count, seed + 2),
      cardioid_identity_suite(10 * sample_count, seed + 3),
      control_sharing_suite(10 * sample_count, seed + 4),
      acquisition_feasibility_suite(10 * sample_count, seed + 5),
  };
  bool all = true;
  for (const SuiteResult& s : suites) {
    out << (s.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << s.name << " n="
        << s.samples << "  " << s.detail << '\n';
    all = all && s.passed;
  }
  return all ? kExitOk : kExitPropertyFailure;
}

int cmd_sweep(const std::filesystem::path& config_path, const SweepSpec& spec,
              const std::filesystem::path& output_dir, const std::vector<std::string>& overrides,
              std::ostream& out, std::ostream& err) {
  if (spec.empty()) {
    err << "sweep needs --grid or --samples\n";
    return kExitUsage;
  }
  ScenarioConfig base;
  std::vector<SweepRun> runs;
  try {
    base = load_with_overrides(config_path, overrides);
    for (const GridAxis& axis : spec.grid) {
      if (axis.values.empty()) throw ConfigError("grid axis '" + axis.key + "' has no values");
    }
    runs = sweep(base, spec);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream table;
  table << std::setprecision(10);
  table << "index,settings,termination,docked,min_h1,min_h2,min_h3,time_to_lock,"
           "final_position_error,final_heading_error,qp_infeasible_count,path_length,error\n";
  bool all_ok = true;
  for (const SweepRun& r : runs) {
    std::string settings;
    for (const auto& [k, v] : r.settings) {
      std::ostringstream kv;
      kv << std::setprecision(10) << k << '=' << v;
      settings += (settings.empty() ? "" : ";") + kv.str();
    }
    table << r.index << ',' << settings << ',' << to_string(r.termination) << ',';
    if (r.metrics) {
      const RunMetrics& m = *r.metrics;
      table << (m.docked ? 1 : 0) << ',' << m.min_h1 << ',' << m.min_h2 << ',' << m.min_h3 << ','
            << opt(m.time_to_lock) << ',' << m.final_position_error << ',' << m.final_heading_error
            << ',' << m.qp_infeasible_count << ',' << r.path_length << ',';
    } else {
      table << ",,,,,,,,,";
    }
    std::string error = r.error;
    for (char& ch : error)
      if (ch == ',' || ch == '\n') ch = ';';
    table << error << '\n';
    all_ok = all_ok && r.metrics && r.metrics->docked && r.termination != Termination::Infeasible &&
             r.metrics->min_h1 >= -kBarrierTolerance;
  }
  try {
    ensure_dir(output_dir);
    std::ofstream f(output_dir / "sweep.csv");
    if (!f) throw std::runtime_error("cannot write " + (output_dir / "sweep.csv").string());
    f << table.str();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  out << table.str();
  out << runs.size() << " runs, " << (all_ok ? "all docked safely" : "some runs failed") << '\n';
  return all_ok ? kExitOk : kExitPropertyFailure;
}

int cmd_plot_data(const std::filesystem::path& config_path, const std::filesystem::path& output_dir,
                  const std::vector<std::string>& overrides, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_with_overrides(config_path, overrides);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const ScenarioResult res = run_scenario(config);
    ensure_dir(output_dir);
    emit_plot_data(res.log, config, output_dir / "plot_data.json");
    out << "wrote " << (output_dir / "plot_data.json").string() << '\n';
    return res.log.termination == Termination::Infeasible ? kExitInfeasible : kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-loop simulation of CBF-filtered docking for a planar floating platform"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir = "out";
  std::vector<std::string> overrides;
  long samples = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> grid;
  std::string start = "locked";
  long sweep_samples = 0;

  auto* run = app.add_subcommand("run", "Run one scenario and write trajectory, metrics and plot data");
  auto* check = app.add_subcommand("check", "Run the randomized verification suites");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a grid or random sweep of scenarios");
  auto* plot = app.add_subcommand("plot-data", "Run one scenario and write plot data only");

  for (auto* sub : {run, sweep_cmd, plot}) {
    sub->add_option("--config", config_path, "Scenario file")->required();
    sub->add_option("--out", output_dir, "Output directory");
    sub->add_option("--set", overrides, "Override key=value (repeatable)");
  }
  check->add_option("--samples", samples, "Base sample count per suite");
  check->add_option("--seed", seed, "Random seed");
  sweep_cmd->add_option("--grid", grid, "Grid axis key=v1,v2,... (repeatable)");
  sweep_cmd->add_option("--samples", sweep_samples, "Random starts per grid point");
  sweep_cmd->add_option("--seed", seed, "Random seed for sampled starts");
  sweep_cmd->add_option("--start", start, "Sampled start kind")
      ->check(CLI::IsMember({"locked", "unlocked"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(config_path, output_dir, overrides, out, err);
    if (*check) return cmd_check(samples, seed, out, err);
    if (*plot) return cmd_plot_data(config_path, output_dir, overrides, out, err);
    SweepSpec spec;
    if (sweep_samples < 0) throw ConfigError("--samples must be non-negative");
    for (const std::string& g : grid) spec.grid.push_back(parse_grid_axis(g));
    spec.random_samples = static_cast<int>(sweep_samples);
    spec.seed = seed;
    spec.start = start == "unlocked" ? StartKind::Unlocked : StartKind::Locked;
    return cmd_sweep(config_path, spec, output_dir, overrides, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
}

}  // namespace docking::cli
