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

#include "docking/log_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace docking {
namespace {

using nlohmann::json;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_inf(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

constexpr int kPlotStride = 50;  // one cone sample every half second at 100 Hz
constexpr int kCardioidSamples = 721;

}  // namespace

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "t",          "r_x",        "r_y",         "theta", "v_x", "v_y",
      "omega_z",    "h1",         "h2",          "h3",    "vbar_x_cmd", "vbar_y_cmd",
      "omega_z_cmd", "f_x",       "f_y",         "tau_z", "mode", "slack"};
  return cols;
}

std::string log_to_csv(const TrajectoryLog& log) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const TrajectoryRecord& r : log.records) {
    out << r.t << ',' << r.state.r_x << ',' << r.state.r_y << ',' << r.state.theta << ','
        << r.state.v_x << ',' << r.state.v_y << ',' << r.state.omega_z << ',' << r.h1 << ','
        << r.h2 << ',' << r.h3 << ',' << r.command.vbar_x << ',' << r.command.vbar_y << ','
        << r.command.omega_z << ',' << r.wrench.f_x << ',' << r.wrench.f_y << ','
        << r.wrench.tau_z << ',' << to_string(r.mode) << ',' << r.slack << '\n';
  }
  return out.str();
}

void write_log_csv(const TrajectoryLog& log, const std::filesystem::path& path) {
  write_file(path, log_to_csv(log));
}

std::string metrics_to_json(const RunMetrics& m) {
  json j;
  j["min_h1"] = finite_or_null(m.min_h1);
  j["min_h2"] = finite_or_null(m.min_h2);
  j["min_h3"] = finite_or_null(m.min_h3);
  j["time_to_lock"] = m.time_to_lock ? json(*m.time_to_lock) : json(nullptr);
  j["final_position_error"] = m.final_position_error;
  j["final_heading_error"] = m.final_heading_error;
  j["docked"] = m.docked;
  j["qp_infeasible_count"] = m.qp_infeasible_count;
  return j.dump(2) + "\n";
}

RunMetrics metrics_from_json(const std::string& text) {
  const json j = json::parse(text);
  RunMetrics m;
  m.min_h1 = number_or_inf(j.at("min_h1"));
  m.min_h2 = number_or_inf(j.at("min_h2"));
  m.min_h3 = number_or_inf(j.at("min_h3"));
  if (!j.at("time_to_lock").is_null()) m.time_to_lock = j.at("time_to_lock").get<double>();
  m.final_position_error = j.at("final_position_error").get<double>();
  m.final_heading_error = j.at("final_heading_error").get<double>();
  m.docked = j.at("docked").get<bool>();
  m.qp_infeasible_count = j.at("qp_infeasible_count").get<int>();
  return m;
}

void write_metrics_json(const RunMetrics& m, const std::filesystem::path& path) {
  write_file(path, metrics_to_json(m));
}

RunMetrics read_metrics_json(const std::filesystem::path& path) {
  try {
    return metrics_from_json(read_file(path));
  } catch (const json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::string plot_data_json(const TrajectoryLog& log, const ScenarioConfig& config) {
  const double a = config.safety.cardioid_a;
  json cardioid = json::array();
  for (int i = 0; i < kCardioidSamples; ++i) {
    const double phi = kTwoPi * i / (kCardioidSamples - 1);
    const double r = 2.0 * a * (1.0 - std::cos(phi));
    cardioid.push_back({r * std::cos(phi), r * std::sin(phi)});
  }

  json trajectory = json::array();
  json rays = json::array();
  const double ray_length = 0.5;
  for (std::size_t i = 0; i < log.records.size(); ++i) {
    const TrajectoryRecord& r = log.records[i];
    trajectory.push_back({{"t", r.t}, {"r_x", r.pose.r_x}, {"r_y", r.pose.r_y},
                          {"theta", r.pose.theta}, {"mode", std::string(to_string(r.mode))}});
    if (i % kPlotStride != 0 && i + 1 != log.records.size()) continue;
    json edges = json::array();
    for (double side : {-1.0, 1.0}) {
      const double ang = r.pose.theta + side * config.vision.theta_v;
      edges.push_back({r.pose.r_x + ray_length * std::cos(ang),
                       r.pose.r_y + ray_length * std::sin(ang)});
    }
    rays.push_back({{"t", r.t}, {"origin", {r.pose.r_x, r.pose.r_y}}, {"edges", edges}});
  }

  json transitions = json::array();
  for (const ModeTransition& tr : log.transitions)
    transitions.push_back({{"t", tr.t}, {"from", std::string(to_string(tr.from))},
                           {"to", std::string(to_string(tr.to))}});

  json j;
  j["cardioid_a"] = a;
  j["theta_v"] = config.vision.theta_v;
  j["cardioid_boundary"] = std::move(cardioid);
  j["vision_cone_rays"] = std::move(rays);
  j["trajectory"] = std::move(trajectory);
  j["mode_transitions"] = std::move(transitions);
  j["termination"] = std::string(to_string(log.termination));
  return j.dump() + "\n";
}

void emit_plot_data(const TrajectoryLog& log, const ScenarioConfig& config,
                    const std::filesystem::path& path) {
  write_file(path, plot_data_json(log, config));
}

}  // namespace docking
