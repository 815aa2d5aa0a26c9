#include <doctest.h>

#include <cmath>
#include <random>

#include "ecodrive/error.hpp"
#include "ecodrive/power.hpp"
#include "oracle.hpp"

using namespace ecodrive;

namespace {

const double kVb = units::mph_to_mps(18.75);

// Resistive part of a ramp's average power, recovered from two durations:
// P(t) = K / t + R.
double resistive_part(const VehicleParams& p, double lo, double hi) {
  const double t1 = 10.0, t2 = 40.0;
  const double p1 = ramp_power(p, kVb, lo, hi, t1, RampKind::Accelerate);
  const double p2 = ramp_power(p, kVb, lo, hi, t2, RampKind::Accelerate);
  return (t1 * p1 - t2 * p2) / (t1 - t2);
}

}  // namespace

TEST_CASE("ramp power reference values") {
  const VehicleParams p = reference_vehicle();
  const double v = units::mph_to_mps(49.6);

  const double accel = ramp_power(p, kVb, 0.0, v, 6.2, RampKind::Accelerate);
  CHECK(accel == doctest::Approx(oracle::ramp_from_rest({}, v, kVb, 6.2)).epsilon(1e-12));
  CHECK(accel == doctest::Approx(98432.567656776).epsilon(1e-9));
  CHECK(accel == doctest::Approx(98430.0).epsilon(0.005));

  const double brake = ramp_power(p, kVb, 0.0, v, 99.2, RampKind::Brake);
  CHECK(brake == doctest::Approx(10068.001143807).epsilon(1e-9));
  CHECK(brake == doctest::Approx(10070.0).epsilon(0.005));
}

TEST_CASE("ramp power pure kinetic case") {
  VehicleParams p = reference_vehicle();
  p.air_density = 0.0;
  p.rolling_coeff = 0.0;
  p.mass_factor = 1.0;
  CHECK(ramp_power(p, 0.0, 0.0, 10.0, 10.0, RampKind::Accelerate) == doctest::Approx(10000.0));
}

TEST_CASE("ramp power reduces to the from-rest form") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    oracle::Vehicle o;
    o.M = 500 + 3000 * u(rng);
    o.rho = 1.5 * u(rng);
    o.Cd = 0.2 + 0.4 * u(rng);
    o.Af = 1.0 + 2.0 * u(rng);
    o.fr = 0.02 * u(rng);
    o.delta = 1.0 + 0.2 * u(rng);
    VehicleParams p;
    p.mass = o.M;
    p.air_density = o.rho;
    p.drag_coeff = o.Cd;
    p.frontal_area = o.Af;
    p.rolling_coeff = o.fr;
    p.mass_factor = o.delta;
    const double vb = 20 * u(rng);
    const double vc = 0.1 + 40 * u(rng);
    const double t = 0.5 + 100 * u(rng);
    CHECK(ramp_power(p, vb, 0.0, vc, t, RampKind::Accelerate) ==
          doctest::Approx(oracle::ramp_from_rest(o, vc, vb, t)).epsilon(1e-12));
  }
}

TEST_CASE("ramp between speeds matches the divided-difference form") {
  const VehicleParams p = reference_vehicle();
  const double lo = units::mph_to_mps(25.0), hi = units::mph_to_mps(75.0);
  const double t = (hi - lo) / units::mph_to_mps(2.0);
  // lo is above base speed, so no V_b^2 term.
  CHECK(ramp_power(p, kVb, lo, hi, t, RampKind::Accelerate) ==
        doctest::Approx(oracle::ramp_between({}, lo, hi, kVb, t)).epsilon(1e-12));
  // Below base speed the correction is present.
  CHECK(ramp_power(p, kVb, 1.0, hi, t, RampKind::Accelerate) ==
        doctest::Approx(oracle::ramp_between({}, 1.0, hi, kVb, t)).epsilon(1e-12));
  CHECK(ramp_power(p, kVb, 1.0, hi, t, RampKind::Accelerate) >
        ramp_power(p, kVb, kVb, hi, t, RampKind::Accelerate));
}

TEST_CASE("resistive averages match quadrature over the constant-power profile") {
  const double lo = 5.0, hi = 30.0, t = 20.0;
  const int steps = 10000;
  double mean_v = 0.0, mean_v3 = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double s = (k + 0.5) * t / steps;
    const double v = std::sqrt(lo * lo + (hi * hi - lo * lo) * s / t);
    mean_v += v / steps;
    mean_v3 += v * v * v / steps;
  }

  VehicleParams rolling_only = reference_vehicle();
  rolling_only.air_density = 0.0;
  const VehicleParams& p = rolling_only;
  CHECK(resistive_part(rolling_only, lo, hi) ==
        doctest::Approx(p.mass * p.gravity * p.rolling_coeff * mean_v).epsilon(1e-3));

  VehicleParams aero_only = reference_vehicle();
  aero_only.rolling_coeff = 0.0;
  const VehicleParams& q = aero_only;
  CHECK(resistive_part(aero_only, lo, hi) ==
        doctest::Approx(0.5 * q.air_density * q.drag_coeff * q.frontal_area * mean_v3)
            .epsilon(1e-3));
}

TEST_CASE("ramp resistive terms approach cruise power as the ramp vanishes") {
  const VehicleParams p = reference_vehicle();
  for (double hi : {5.0, 20.0, 33.0}) {
    CHECK(resistive_part(p, hi - 1e-3, hi) == doctest::Approx(cruise_power(p, hi)).epsilon(1e-3));
  }
}

TEST_CASE("ramp power errors") {
  const VehicleParams p = reference_vehicle();
  auto code = [&](double lo, double hi, double t) {
    try {
      ramp_power(p, kVb, lo, hi, t, RampKind::Accelerate);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code(0, 10, 0) == ErrorCode::NonPositiveDuration);
  CHECK(code(0, 10, -1) == ErrorCode::NonPositiveDuration);
  CHECK(code(10, 10, 1) == ErrorCode::DegenerateRamp);
  CHECK(code(12, 10, 1) == ErrorCode::DegenerateRamp);
  CHECK(ramp_power(p, kVb, 0, 10, 1, RampKind::Brake) ==
        ramp_power(p, kVb, 0, 10, 1, RampKind::Accelerate));
}

TEST_CASE("cruise power") {
  const VehicleParams p = reference_vehicle();
  CHECK(cruise_power(p, 0.0) == 0.0);
  CHECK(cruise_power(p, units::mph_to_mps(49.6)) == doctest::Approx(7542.0).epsilon(0.005));
  CHECK(cruise_power(p, units::mph_to_mps(50.4)) == doctest::Approx(7769.0).epsilon(0.005));
  CHECK(cruise_power(p, units::mph_to_mps(49.6)) ==
        doctest::Approx(oracle::cruise({}, units::mph_to_mps(49.6))).epsilon(1e-13));
  CHECK_THROWS_AS(cruise_power(p, -1.0), Error);

  double prev = 0.0;
  for (double v = 0.01; v < 60.0; v += 0.01) {
    const double now = cruise_power(p, v);
    CHECK_MESSAGE(now > prev, "v = " << v);
    prev = now;
  }
}

TEST_CASE("instantaneous power") {
  const VehicleParams p = reference_vehicle();
  CHECK(instantaneous_power(p, 0.0, 3.0) == 0.0);
  CHECK(instantaneous_power(p, 0.0, -3.0) == 0.0);
  const double v = units::mph_to_mps(49.6);
  CHECK(instantaneous_power(p, v, 0.0) == doctest::Approx(cruise_power(p, v)).epsilon(1e-14));

  VehicleParams bare = p;
  bare.mass_factor = 1.0;
  bare.rolling_coeff = 0.0;
  bare.air_density = 0.0;
  CHECK(instantaneous_power(bare, 10.0, 1.0) == doctest::Approx(20000.0));
  CHECK(instantaneous_power(p, 20.0, -3.0) < 0.0);
  CHECK_THROWS_AS(instantaneous_power(p, -0.1, 0.0), Error);
}
