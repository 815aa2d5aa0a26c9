#include <doctest.h>

#include <sstream>

#include "ecodrive/config.hpp"
#include "ecodrive/error.hpp"

using namespace ecodrive;

namespace {

RunSetup parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ErrorCode code_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("empty config gives the reference setup") {
  const RunSetup s = parse("# nothing here\n\n");
  CHECK(s.vehicle.mass == 2000.0);
  CHECK(s.open_road.max_time == 420.0);
  CHECK(s.case2_scenario().segments.size() == 3);
}

TEST_CASE("full reference config round trips to the defaults") {
  const RunSetup s = parse(R"(
    mass = 2000            # kg
    air_density = 1.22
    drag_coeff = 0.3
    frontal_area = 1.6
    rolling_coeff = 0.01
    wheel_radius = 0.28
    wind_speed = 0
    mass_factor = 1.04
    final_drive_ratio = 4.18
    transmission_ratio = 1.3
    speed_ratio = 4
    motor_eff = 85
    inverter_eff = 95
    gearbox_eff = 90
    regen_eff = 50
    gravity = 9.81
    total_distance = 5
    max_time = 420
    max_accel = 8
    max_speed = 75
    restricted_length = 1
    restricted_speed = 25
  )");
  const RunSetup d;
  CHECK(s.vehicle.motor_eff == doctest::Approx(d.vehicle.motor_eff));
  CHECK(s.vehicle.regen_eff == doctest::Approx(0.5));
  CHECK(s.open_road.total_distance == doctest::Approx(d.open_road.total_distance));
  CHECK(s.open_road.max_accel == doctest::Approx(d.open_road.max_accel));
  CHECK(s.open_road.max_speed == doctest::Approx(d.open_road.max_speed));
  CHECK(s.restricted_limit == doctest::Approx(d.restricted_limit));
}

TEST_CASE("overrides convert units") {
  const RunSetup s = parse("gravity = 9.8\nmax_time=500\nmax_speed = 60\n");
  CHECK(s.vehicle.gravity == 9.8);
  CHECK(s.open_road.max_time == 500.0);
  CHECK(s.open_road.max_speed == doctest::Approx(60 * 0.44704));
  CHECK(s.open_road.segments.front().speed_limit == s.open_road.max_speed);
}

TEST_CASE("config errors") {
  CHECK(code_of("mass 2000\n") == ErrorCode::InvalidConfig);
  CHECK(code_of("weight = 2000\n") == ErrorCode::InvalidConfig);
  CHECK(code_of("mass = heavy\n") == ErrorCode::InvalidConfig);
  CHECK(code_of("mass = 1\nmass = 2\n") == ErrorCode::InvalidConfig);
  CHECK(code_of("mass = -5\n") == ErrorCode::InvalidConfig);
  CHECK(code_of("motor_eff = 120\n") == ErrorCode::InvalidConfig);
  CHECK(code_of("restricted_speed = 90\n") == ErrorCode::InvalidConfig);
  CHECK_THROWS_AS(load_config("/nonexistent/ecodrive.cfg"), Error);
}
