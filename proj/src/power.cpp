#include "ecodrive/power.hpp"

#include <cmath>

#include "ecodrive/error.hpp"

namespace ecodrive {

namespace {

double aero_factor(const VehicleParams& p) {
  return 0.5 * p.air_density * p.drag_coeff * p.frontal_area;
}

}  // namespace

double ramp_power(const VehicleParams& p, double base_speed, double v_lo, double v_hi, double t,
                  RampKind /*kind*/) {
  if (!(t > 0)) throw Error(ErrorCode::NonPositiveDuration, "ramp duration must be > 0");
  if (v_lo < 0) throw Error(ErrorCode::NegativeSpeed, "ramp speeds must be >= 0");
  if (!(v_hi > v_lo)) throw Error(ErrorCode::DegenerateRamp, "ramp requires v_hi > v_lo");

  const double lo2 = v_lo * v_lo;
  const double hi2 = v_hi * v_hi;
  const double span2 = hi2 - lo2;

  double kinetic_span = span2;
  if (v_lo < base_speed) kinetic_span += base_speed * base_speed;
  const double kinetic = p.mass_factor * p.mass * kinetic_span / (2.0 * t);

  // (v_hi^3 - v_lo^3) / (v_hi^2 - v_lo^2) and the quintic analogue, written
  // as polynomial ratios so nearly equal endpoints do not cancel.
  const double sum = v_hi + v_lo;
  const double cubic_ratio = (hi2 + v_hi * v_lo + lo2) / sum;
  const double quintic_ratio =
      (hi2 * hi2 + hi2 * v_hi * v_lo + hi2 * lo2 + v_hi * lo2 * v_lo + lo2 * lo2) / sum;

  const double rolling = p.mass * p.gravity * p.rolling_coeff * (2.0 / 3.0) * cubic_ratio;
  const double aero = aero_factor(p) * (2.0 / 5.0) * quintic_ratio;
  return kinetic + rolling + aero;
}

double cruise_power(const VehicleParams& p, double v) {
  if (v < 0) throw Error(ErrorCode::NegativeSpeed, "cruise speed must be >= 0");
  return p.mass * p.gravity * p.rolling_coeff * v + aero_factor(p) * v * v * v;
}

double instantaneous_power(const VehicleParams& p, double v, double a) {
  if (v < 0) throw Error(ErrorCode::NegativeSpeed, "speed must be >= 0");
  const double force =
      p.mass_factor * p.mass * a + p.mass * p.gravity * p.rolling_coeff + aero_factor(p) * v * v;
  return force * v;
}

}  // namespace ecodrive
