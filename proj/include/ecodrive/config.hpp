#pragma once

#include <filesystem>
#include <istream>

#include "ecodrive/units.hpp"

namespace ecodrive {

// Everything a `key = value` config file can set. Defaults are the
// reference case-study values.
struct RunSetup {
  VehicleParams vehicle = reference_vehicle();
  Scenario open_road = reference_scenario_case1();
  double restricted_length = units::miles_to_m(1.0);    // m
  double restricted_limit = units::mph_to_mps(25.0);    // m/s

  Scenario case1_scenario() const { return open_road; }
  Scenario case2_scenario() const {
    return with_restricted_middle(open_road, restricted_length, restricted_limit);
  }
};

// Parses `key = value` lines; `#` starts a comment. Values use the field
// units of the reference table (kg, mph, mph/s, miles, s, percent for
// efficiencies) and are converted to SI. Unknown keys, duplicate keys and
// malformed numbers throw Error(InvalidConfig). The result is validated.
RunSetup parse_config(std::istream& in);
RunSetup load_config(const std::filesystem::path& path);

}  // namespace ecodrive
