#include "ecodrive/units.hpp"

#include <cmath>
#include <string>

#include "ecodrive/error.hpp"

namespace ecodrive {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NonPositiveDuration: return "NonPositiveDuration";
    case ErrorCode::DegenerateRamp: return "DegenerateRamp";
    case ErrorCode::NegativeSpeed: return "NegativeSpeed";
    case ErrorCode::NonPositiveStep: return "NonPositiveStep";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveBinWidth: return "NonPositiveBinWidth";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

bool finite_all(std::initializer_list<double> values) {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

void VehicleParams::validate() const {
  constexpr auto code = ErrorCode::InvalidParams;
  require(finite_all({mass, air_density, drag_coeff, frontal_area, rolling_coeff, wheel_radius,
                      wind_speed, mass_factor, final_drive_ratio, transmission_ratio, speed_ratio,
                      motor_eff, inverter_eff, gearbox_eff, regen_eff, gravity}),
          code, "all vehicle parameters must be finite");
  require(mass > 0, code, "mass must be > 0");
  require(air_density >= 0, code, "air_density must be >= 0");
  require(drag_coeff >= 0, code, "drag_coeff must be >= 0");
  require(frontal_area > 0, code, "frontal_area must be > 0");
  require(rolling_coeff >= 0, code, "rolling_coeff must be >= 0");
  require(wheel_radius > 0, code, "wheel_radius must be > 0");
  require(wind_speed >= 0, code, "wind_speed must be >= 0");
  require(mass_factor >= 1, code, "mass_factor must be >= 1");
  require(final_drive_ratio > 0, code, "final_drive_ratio must be > 0");
  require(transmission_ratio > 0, code, "transmission_ratio must be > 0");
  require(speed_ratio >= 1, code, "speed_ratio must be >= 1");
  require(motor_eff > 0 && motor_eff <= 1, code, "motor_eff must be in (0, 1]");
  require(inverter_eff > 0 && inverter_eff <= 1, code, "inverter_eff must be in (0, 1]");
  require(gearbox_eff > 0 && gearbox_eff <= 1, code, "gearbox_eff must be in (0, 1]");
  require(regen_eff >= 0 && regen_eff <= 1, code, "regen_eff must be in [0, 1]");
  require(gravity > 0, code, "gravity must be > 0");
}

VehicleParams reference_vehicle() { return VehicleParams{}; }

void Scenario::validate() const {
  constexpr auto code = ErrorCode::InvalidScenario;
  require(finite_all({total_distance, max_time, max_accel, max_speed}), code,
          "scenario values must be finite");
  require(total_distance > 0, code, "total_distance must be > 0");
  require(max_time > 0, code, "max_time must be > 0");
  require(max_accel > 0, code, "max_accel must be > 0");
  require(max_speed > 0, code, "max_speed must be > 0");
  require(!segments.empty(), code, "at least one road segment is required");
  double sum = 0.0;
  for (const auto& s : segments) {
    require(s.length > 0, code, "segment length must be > 0");
    require(s.speed_limit > 0, code, "segment speed_limit must be > 0");
    require(s.speed_limit <= max_speed, code, "segment speed_limit exceeds max_speed");
    sum += s.length;
  }
  require(std::abs(sum - total_distance) <= 1e-9 * total_distance, code,
          "segment lengths must sum to total_distance");
}

Scenario reference_scenario_case1() {
  Scenario sc;
  sc.total_distance = units::miles_to_m(5.0);
  sc.max_time = 420.0;
  sc.max_accel = units::mph_to_mps(8.0);
  sc.max_speed = units::mph_to_mps(75.0);
  sc.segments = {{sc.total_distance, sc.max_speed}};
  return sc;
}

Scenario with_restricted_middle(const Scenario& open_road, double restricted_length,
                                double restricted_limit) {
  require(restricted_length > 0 && restricted_length < open_road.total_distance,
          ErrorCode::InvalidScenario, "restricted_length must lie inside the route");
  Scenario sc = open_road;
  const double side = (open_road.total_distance - restricted_length) / 2.0;
  sc.segments = {{side, open_road.max_speed},
                 {restricted_length, restricted_limit},
                 {open_road.total_distance - side - restricted_length, open_road.max_speed}};
  sc.validate();
  return sc;
}

Scenario reference_scenario_case2() {
  return with_restricted_middle(reference_scenario_case1(), units::miles_to_m(1.0),
                                units::mph_to_mps(25.0));
}

double base_speed(const VehicleParams& p, double max_speed) { return max_speed / p.speed_ratio; }

double drivetrain_efficiency(const VehicleParams& p) {
  return p.motor_eff * p.inverter_eff * p.gearbox_eff;
}

}  // namespace ecodrive
