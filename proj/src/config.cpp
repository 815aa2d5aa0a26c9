#include "ecodrive/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ecodrive/error.hpp"

namespace ecodrive {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, int line_no) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidConfig,
                "line " + std::to_string(line_no) + ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

using Setter = std::function<void(RunSetup&, double)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  using namespace units;
  static const std::map<std::string, Setter, std::less<>> table = {
      {"mass", [](RunSetup& s, double v) { s.vehicle.mass = v; }},
      {"air_density", [](RunSetup& s, double v) { s.vehicle.air_density = v; }},
      {"drag_coeff", [](RunSetup& s, double v) { s.vehicle.drag_coeff = v; }},
      {"frontal_area", [](RunSetup& s, double v) { s.vehicle.frontal_area = v; }},
      {"rolling_coeff", [](RunSetup& s, double v) { s.vehicle.rolling_coeff = v; }},
      {"wheel_radius", [](RunSetup& s, double v) { s.vehicle.wheel_radius = v; }},
      {"wind_speed", [](RunSetup& s, double v) { s.vehicle.wind_speed = mph_to_mps(v); }},
      {"mass_factor", [](RunSetup& s, double v) { s.vehicle.mass_factor = v; }},
      {"final_drive_ratio", [](RunSetup& s, double v) { s.vehicle.final_drive_ratio = v; }},
      {"transmission_ratio", [](RunSetup& s, double v) { s.vehicle.transmission_ratio = v; }},
      {"speed_ratio", [](RunSetup& s, double v) { s.vehicle.speed_ratio = v; }},
      {"motor_eff", [](RunSetup& s, double v) { s.vehicle.motor_eff = v / 100.0; }},
      {"inverter_eff", [](RunSetup& s, double v) { s.vehicle.inverter_eff = v / 100.0; }},
      {"gearbox_eff", [](RunSetup& s, double v) { s.vehicle.gearbox_eff = v / 100.0; }},
      {"regen_eff", [](RunSetup& s, double v) { s.vehicle.regen_eff = v / 100.0; }},
      {"gravity", [](RunSetup& s, double v) { s.vehicle.gravity = v; }},
      {"total_distance", [](RunSetup& s, double v) { s.open_road.total_distance = miles_to_m(v); }},
      {"max_time", [](RunSetup& s, double v) { s.open_road.max_time = v; }},
      {"max_accel", [](RunSetup& s, double v) { s.open_road.max_accel = mph_to_mps(v); }},
      {"max_speed", [](RunSetup& s, double v) { s.open_road.max_speed = mph_to_mps(v); }},
      {"restricted_length", [](RunSetup& s, double v) { s.restricted_length = miles_to_m(v); }},
      {"restricted_speed", [](RunSetup& s, double v) { s.restricted_limit = mph_to_mps(v); }},
  };
  return table;
}

}  // namespace

RunSetup parse_config(std::istream& in) {
  RunSetup setup;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidConfig,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) {
      throw Error(ErrorCode::InvalidConfig,
                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
    if (!seen.emplace(key).second) {
      throw Error(ErrorCode::InvalidConfig,
                  "line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
    }
    it->second(setup, parse_number(value, line_no));
  }

  setup.open_road.segments = {{setup.open_road.total_distance, setup.open_road.max_speed}};
  try {
    setup.vehicle.validate();
    setup.open_road.validate();
    setup.case2_scenario();
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  return setup;
}

RunSetup load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open config file " + path.string());
  return parse_config(in);
}

}  // namespace ecodrive
