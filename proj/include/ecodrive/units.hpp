#pragma once

#include <vector>

namespace ecodrive {

namespace units {

inline constexpr double kMpsPerMph = 0.44704;
inline constexpr double kMetersPerMile = 1609.344;
inline constexpr double kJoulesPerKwh = 3.6e6;

constexpr double mph_to_mps(double mph) { return mph * kMpsPerMph; }
constexpr double mps_to_mph(double mps) { return mps / kMpsPerMph; }
constexpr double miles_to_m(double miles) { return miles * kMetersPerMile; }
constexpr double m_to_miles(double m) { return m / kMetersPerMile; }
constexpr double j_to_kwh(double j) { return j / kJoulesPerKwh; }
constexpr double kwh_to_j(double kwh) { return kwh * kJoulesPerKwh; }

}  // namespace units

// Vehicle constants, SI throughout. Efficiencies are fractions.
//
// wheel_radius, wind_speed, final_drive_ratio and transmission_ratio are
// carried and validated but no force or power formula reads them.
struct VehicleParams {
  double mass = 2000.0;            // kg
  double air_density = 1.22;       // kg/m^3
  double drag_coeff = 0.3;
  double frontal_area = 1.6;       // m^2
  double rolling_coeff = 0.01;
  double wheel_radius = 0.28;      // m
  double wind_speed = 0.0;         // m/s
  double mass_factor = 1.04;
  double final_drive_ratio = 4.18;
  double transmission_ratio = 1.3;
  double speed_ratio = 4.0;        // V_max / V_b
  double motor_eff = 0.85;
  double inverter_eff = 0.95;
  double gearbox_eff = 0.90;
  double regen_eff = 0.50;
  double gravity = 9.81;           // m/s^2

  // Throws Error(InvalidParams) naming the first offending field.
  void validate() const;
};

// Table values used by both case studies.
VehicleParams reference_vehicle();

struct RoadSegment {
  double length;       // m
  double speed_limit;  // m/s
};

struct Scenario {
  double total_distance;  // m
  double max_time;        // s
  double max_accel;       // m/s^2
  double max_speed;       // m/s
  std::vector<RoadSegment> segments;

  // Throws Error(InvalidScenario).
  void validate() const;
};

// 5 miles, 420 s, 8 mph/s, 75 mph; one unrestricted segment.
Scenario reference_scenario_case1();

// Same road with a restricted stretch centred on the route, giving three
// segments: open, restricted, open.
Scenario with_restricted_middle(const Scenario& open_road, double restricted_length,
                                double restricted_limit);

// reference_scenario_case1() with the middle mile limited to 25 mph.
Scenario reference_scenario_case2();

// V_b = V_max / x.
double base_speed(const VehicleParams& p, double max_speed);

// eta_m * eta_i * eta_t.
double drivetrain_efficiency(const VehicleParams& p);

}  // namespace ecodrive
