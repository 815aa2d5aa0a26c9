#include "ecodrive/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ecodrive/error.hpp"
#include "format.hpp"

namespace ecodrive {

const char* to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::Accelerate: return "accelerate";
    case PhaseKind::Brake: return "brake";
    case PhaseKind::Cruise: return "cruise";
  }
  return "unknown";
}

const char* to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::ZeroCruiseSpeed: return "ZeroCruiseSpeed";
    case InfeasibleReason::SpeedLimit: return "SpeedLimit";
    case InfeasibleReason::AccelLimit: return "AccelLimit";
    case InfeasibleReason::NonPositiveRate: return "NonPositiveRate";
    case InfeasibleReason::SegmentOvershoot: return "SegmentOvershoot";
    case InfeasibleReason::ProfileShapeViolated: return "ProfileShapeViolated";
    case InfeasibleReason::TimeExceeded: return "TimeExceeded";
    case InfeasibleReason::UnsupportedScenario: return "UnsupportedScenario";
  }
  return "unknown";
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::Distance: return "Distance";
    case Violation::SpeedLimit: return "SpeedLimit";
    case Violation::AccelLimit: return "AccelLimit";
    case Violation::TimeLimit: return "TimeLimit";
  }
  return "unknown";
}

double DrivingCycle::total_time() const {
  double t = 0.0;
  for (const auto& ph : phases) t += ph.duration;
  return t;
}

double DrivingCycle::total_distance() const {
  double d = 0.0;
  for (const auto& ph : phases) d += ph.distance;
  return d;
}

double DrivingCycle::peak_speed() const {
  double v = 0.0;
  for (const auto& ph : phases) v = std::max({v, ph.v_start, ph.v_end});
  return v;
}

namespace {

// Relative slack for limit comparisons, so grid values that sit exactly on a
// limit (8 mph/s, 75 mph) are not rejected by rounding.
constexpr double kSlack = 1e-9;

bool exceeds(double value, double limit) { return value > limit * (1.0 + kSlack); }

Phase ramp(double v_start, double v_end, double rate) {
  const double duration = std::abs(v_end - v_start) / rate;
  return Phase{v_end > v_start ? PhaseKind::Accelerate : PhaseKind::Brake, v_start, v_end,
               duration, 0.5 * (v_start + v_end) * duration};
}

Phase cruise(double v, double duration) {
  return Phase{PhaseKind::Cruise, v, v, duration, v * duration};
}

void push_nonempty(std::vector<Phase>& phases, const Phase& ph) {
  if (ph.duration > 0) phases.push_back(ph);
}

double min_limit(const Scenario& sc) {
  double lim = sc.max_speed;
  for (const auto& s : sc.segments) lim = std::min(lim, s.speed_limit);
  return lim;
}

}  // namespace

BuildResult build_case1(const Scenario& sc, const CaseIParams& c) {
  if (!(c.alpha > 0) || !(c.beta > 0)) return Infeasible{InfeasibleReason::NonPositiveRate, {}};
  if (!(c.speed > 0)) return Infeasible{InfeasibleReason::ZeroCruiseSpeed, {}};
  if (exceeds(c.speed, min_limit(sc))) return Infeasible{InfeasibleReason::SpeedLimit, {}};
  if (exceeds(c.alpha, sc.max_accel) || exceeds(c.beta, sc.max_accel)) {
    return Infeasible{InfeasibleReason::AccelLimit, {}};
  }

  const Phase up = ramp(0.0, c.speed, c.alpha);
  const Phase down = ramp(c.speed, 0.0, c.beta);
  const double cruise_time = (sc.total_distance - up.distance - down.distance) / c.speed;
  if (cruise_time < 0) {
    return Infeasible{InfeasibleReason::SegmentOvershoot, up.duration + down.duration};
  }
  const double total = up.duration + cruise_time + down.duration;
  if (exceeds(total, sc.max_time)) return Infeasible{InfeasibleReason::TimeExceeded, total};

  DrivingCycle cy;
  cy.scenario = sc;
  cy.phases.push_back(up);
  push_nonempty(cy.phases, cruise(c.speed, cruise_time));
  cy.phases.push_back(down);
  return cy;
}

BuildResult build_case2(const Scenario& sc, const CaseIIParams& c) {
  if (sc.segments.size() != 3) return Infeasible{InfeasibleReason::UnsupportedScenario, {}};
  const auto& entry = sc.segments[0];
  const auto& restricted = sc.segments[1];
  const auto& exit = sc.segments[2];

  if (!(c.alpha1 > 0) || !(c.beta1 > 0) || !(c.alpha2 > 0) || !(c.beta2 > 0)) {
    return Infeasible{InfeasibleReason::NonPositiveRate, {}};
  }
  if (!(c.v2 > 0)) return Infeasible{InfeasibleReason::ZeroCruiseSpeed, {}};
  if (c.v1 < c.v2 || c.v3 < c.v2) return Infeasible{InfeasibleReason::ProfileShapeViolated, {}};
  if (exceeds(c.v1, std::min(entry.speed_limit, sc.max_speed)) ||
      exceeds(c.v2, std::min(restricted.speed_limit, sc.max_speed)) ||
      exceeds(c.v3, std::min(exit.speed_limit, sc.max_speed))) {
    return Infeasible{InfeasibleReason::SpeedLimit, {}};
  }
  for (double rate : {c.alpha1, c.beta1, c.alpha2, c.beta2}) {
    if (exceeds(rate, sc.max_accel)) return Infeasible{InfeasibleReason::AccelLimit, {}};
  }

  const Phase p1 = ramp(0.0, c.v1, c.alpha1);
  const Phase p3 = ramp(c.v1, c.v2, c.beta1);
  const Phase p5 = ramp(c.v2, c.v3, c.alpha2);
  const Phase p7 = ramp(c.v3, 0.0, c.beta2);
  const Phase p4 = cruise(c.v2, restricted.length / c.v2);

  const double t2 = (entry.length - p1.distance - p3.distance) / c.v1;
  const double t6 = (exit.length - p5.distance - p7.distance) / c.v3;
  if (t2 < 0 || t6 < 0) {
    return Infeasible{InfeasibleReason::SegmentOvershoot,
                      p1.duration + p3.duration + p4.duration + p5.duration + p7.duration};
  }

  DrivingCycle cy;
  cy.scenario = sc;
  cy.phases.push_back(p1);
  push_nonempty(cy.phases, cruise(c.v1, t2));
  push_nonempty(cy.phases, p3);
  cy.phases.push_back(p4);
  push_nonempty(cy.phases, p5);
  push_nonempty(cy.phases, cruise(c.v3, t6));
  cy.phases.push_back(p7);

  const double total = cy.total_time();
  if (exceeds(total, sc.max_time)) return Infeasible{InfeasibleReason::TimeExceeded, total};
  return cy;
}

BuildResult build_cycle(const Scenario& sc, const CandidateParams& c) {
  return std::visit(
      [&](const auto& params) -> BuildResult {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, CaseIParams>) {
          return build_case1(sc, params);
        } else {
          return build_case2(sc, params);
        }
      },
      c);
}

std::vector<Violation> check_constraints(const DrivingCycle& cy, const Scenario& sc) {
  std::vector<Violation> out;
  if (std::abs(cy.total_distance() - sc.total_distance) > 1e-6 * sc.total_distance) {
    out.push_back(Violation::Distance);
  }

  bool speed_ok = true;
  bool accel_ok = true;
  double x0 = 0.0;
  for (const auto& ph : cy.phases) {
    const double x1 = x0 + ph.distance;
    const double v_peak = std::max(ph.v_start, ph.v_end);
    if (exceeds(v_peak, sc.max_speed)) speed_ok = false;
    double seg_start = 0.0;
    for (const auto& seg : sc.segments) {
      const double seg_end = seg_start + seg.length;
      const double overlap = std::min(x1, seg_end) - std::max(x0, seg_start);
      if (overlap > 1e-9 * sc.total_distance && exceeds(v_peak, seg.speed_limit)) {
        speed_ok = false;
      }
      seg_start = seg_end;
    }
    if (ph.is_ramp() && exceeds(std::abs(ph.acceleration()), sc.max_accel)) accel_ok = false;
    x0 = x1;
  }
  if (!speed_ok) out.push_back(Violation::SpeedLimit);
  if (!accel_ok) out.push_back(Violation::AccelLimit);
  if (exceeds(cy.total_time(), sc.max_time)) out.push_back(Violation::TimeLimit);
  return out;
}

std::vector<ProfileSample> sample_profile(const DrivingCycle& cy, double dt) {
  if (!(dt > 0)) throw Error(ErrorCode::NonPositiveStep, "profile step must be > 0");
  const double total = cy.total_time();
  std::vector<ProfileSample> out;

  std::size_t idx = 0;
  double phase_start = 0.0;
  auto speed_at = [&](double t) {
    while (idx + 1 < cy.phases.size() && t > phase_start + cy.phases[idx].duration) {
      phase_start += cy.phases[idx].duration;
      ++idx;
    }
    if (cy.phases.empty()) return 0.0;
    const Phase& ph = cy.phases[idx];
    const double frac = std::clamp((t - phase_start) / ph.duration, 0.0, 1.0);
    return (1.0 - frac) * ph.v_start + frac * ph.v_end;
  };

  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t >= total - 1e-9 * std::max(total, 1.0)) break;
    out.push_back({t, speed_at(t)});
  }
  out.push_back({total, cy.phases.empty() ? 0.0 : cy.phases.back().v_end});
  return out;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfileSample>& samples) {
  out << "t_s,v_mph\n";
  for (const auto& s : samples) {
    out << detail::format_number(s.t) << ',' << detail::format_number(units::mps_to_mph(s.v))
        << '\n';
  }
}

void write_profile_csv(const std::filesystem::path& path,
                       const std::vector<ProfileSample>& samples) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  write_profile_csv(out, samples);
}

}  // namespace ecodrive
