#pragma once

#include "ecodrive/units.hpp"

namespace ecodrive {

enum class RampKind { Accelerate, Brake };

// Average tractive power over a ramp between v_lo and v_hi lasting t seconds.
//
//   K      = delta M (v_hi^2 - v_lo^2 + [v_lo < V_b] V_b^2) / (2t)
//   R_roll = M g f_r * 2/3 (v_hi^3 - v_lo^3) / (v_hi^2 - v_lo^2)
//   R_aero = 1/2 rho C_d A_f * 2/5 (v_hi^5 - v_lo^5) / (v_hi^2 - v_lo^2)
//
// The resistive terms are time averages over a constant-power ramp (v^2
// linear in time); for v_lo = 0 they reduce to 2/3 M g f_r V and
// 1/5 rho C_d A_f V^3. Braking uses the same magnitude; `kind` only tags
// the phase. Throws NonPositiveDuration or DegenerateRamp.
double ramp_power(const VehicleParams& p, double base_speed, double v_lo, double v_hi, double t,
                  RampKind kind);

// M g f_r V + 1/2 rho C_d A_f V^3. Throws NegativeSpeed.
double cruise_power(const VehicleParams& p, double v);

// (delta M a + M g f_r + 1/2 rho C_d A_f v^2) v. Negative when braking hard
// enough. Throws NegativeSpeed.
double instantaneous_power(const VehicleParams& p, double v, double a);

}  // namespace ecodrive
