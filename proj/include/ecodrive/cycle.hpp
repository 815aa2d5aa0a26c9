#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ecodrive/power.hpp"
#include "ecodrive/units.hpp"

namespace ecodrive {

enum class PhaseKind { Accelerate, Brake, Cruise };

const char* to_string(PhaseKind kind);

// One piece of a trapezoidal speed profile. Ramps use constant-acceleration
// kinematics: distance = (v_start + v_end) / 2 * duration.
struct Phase {
  PhaseKind kind;
  double v_start;   // m/s
  double v_end;     // m/s
  double duration;  // s
  double distance;  // m

  bool is_ramp() const { return kind != PhaseKind::Cruise; }
  double acceleration() const { return (v_end - v_start) / duration; }
};

struct DrivingCycle {
  std::vector<Phase> phases;
  Scenario scenario;

  double total_time() const;
  double total_distance() const;
  double peak_speed() const;
};

// Case I: accelerate at alpha to V, cruise, brake at beta to rest.
struct CaseIParams {
  double alpha;  // m/s^2
  double beta;   // m/s^2
  double speed;  // m/s

  friend bool operator==(const CaseIParams&, const CaseIParams&) = default;
};

// Case II: 0 -> V1 (alpha1), cruise V1, V1 -> V2 (beta1), cruise V2 through
// the restricted segment, V2 -> V3 (alpha2), cruise V3, V3 -> 0 (beta2).
struct CaseIIParams {
  double alpha1;
  double v1;
  double beta1;
  double v2;
  double alpha2;
  double v3;
  double beta2;

  friend bool operator==(const CaseIIParams&, const CaseIIParams&) = default;
};

using CandidateParams = std::variant<CaseIParams, CaseIIParams>;

enum class InfeasibleReason {
  ZeroCruiseSpeed,
  SpeedLimit,
  AccelLimit,
  NonPositiveRate,
  SegmentOvershoot,
  ProfileShapeViolated,
  TimeExceeded,
  UnsupportedScenario,
};

const char* to_string(InfeasibleReason reason);

struct Infeasible {
  InfeasibleReason reason;
  // Trip time implied by the candidate, when the kinematics got far enough
  // to compute it.
  std::optional<double> total_time;
};

using BuildResult = std::variant<DrivingCycle, Infeasible>;

inline bool is_feasible(const BuildResult& r) { return std::holds_alternative<DrivingCycle>(r); }

// Cruise time is solved from the distance constraint. Never throws on bad
// candidates; returns Infeasible instead.
BuildResult build_case1(const Scenario& sc, const CaseIParams& c);

// Needs a three-segment scenario (open, restricted, open). The V1 -> V2
// deceleration ends exactly at the restricted segment's entry and the
// V2 -> V3 acceleration starts exactly at its exit. Ramps between equal
// speeds are dropped.
BuildResult build_case2(const Scenario& sc, const CaseIIParams& c);

BuildResult build_cycle(const Scenario& sc, const CandidateParams& c);

enum class Violation { Distance, SpeedLimit, AccelLimit, TimeLimit };

const char* to_string(Violation v);

// Empty iff distance, speed, acceleration and time constraints all hold.
// Distance is compared to 1e-6 relative.
std::vector<Violation> check_constraints(const DrivingCycle& cy, const Scenario& sc);

struct ProfileSample {
  double t;  // s
  double v;  // m/s
};

// Samples at t = 0, dt, 2dt, ... plus the final instant. Throws
// NonPositiveStep.
std::vector<ProfileSample> sample_profile(const DrivingCycle& cy, double dt);

// CSV header `t_s,v_mph`.
void write_profile_csv(std::ostream& out, const std::vector<ProfileSample>& samples);
void write_profile_csv(const std::filesystem::path& path,
                       const std::vector<ProfileSample>& samples);

}  // namespace ecodrive
