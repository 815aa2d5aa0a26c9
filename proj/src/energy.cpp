#include "ecodrive/energy.hpp"

#include <cmath>
#include <fstream>

#include "ecodrive/error.hpp"
#include "ecodrive/power.hpp"
#include "format.hpp"

namespace ecodrive {

const char* to_string(EfficiencyModel m) {
  switch (m) {
    case EfficiencyModel::WheelNet: return "wheel-net";
    case EfficiencyModel::SplitPath: return "split-path";
  }
  return "unknown";
}

namespace {

void finish(const VehicleParams& p, EfficiencyModel m, EnergyBreakdown& e) {
  const double eta_drive = drivetrain_efficiency(p);
  e.regen_total = p.regen_eff * e.braking_total;
  switch (m) {
    case EfficiencyModel::WheelNet:
      e.battery_total = (e.traction_total - e.regen_total) / eta_drive;
      break;
    case EfficiencyModel::SplitPath:
      e.battery_total = e.traction_total / eta_drive - e.regen_total;
      break;
  }
  e.battery_total_kwh = units::j_to_kwh(e.battery_total);
}

}  // namespace

EnergyBreakdown cycle_energy(const VehicleParams& p, const DrivingCycle& cy, EfficiencyModel m) {
  const double v_base = base_speed(p, cy.scenario.max_speed);
  EnergyBreakdown e;
  e.phases.reserve(cy.phases.size());
  for (const auto& ph : cy.phases) {
    double energy = 0.0;
    switch (ph.kind) {
      case PhaseKind::Cruise:
        energy = cruise_power(p, ph.v_start) * ph.duration;
        e.traction_total += energy;
        break;
      case PhaseKind::Accelerate:
        energy = ramp_power(p, v_base, ph.v_start, ph.v_end, ph.duration, RampKind::Accelerate) *
                 ph.duration;
        e.traction_total += energy;
        break;
      case PhaseKind::Brake:
        energy = ramp_power(p, v_base, ph.v_end, ph.v_start, ph.duration, RampKind::Brake) *
                 ph.duration;
        e.braking_total += energy;
        energy = -energy;
        break;
    }
    e.phases.push_back({ph.kind, ph.duration, energy});
  }
  finish(p, m, e);
  return e;
}

double fitness(double energy_kwh, bool feasible) {
  if (!feasible) return 0.0;
  return 1.0 / (1.0 + energy_kwh);
}

EnergyBreakdown numerical_energy(const VehicleParams& p, const DrivingCycle& cy,
                                 EfficiencyModel m, double dt) {
  if (!(dt > 0)) throw Error(ErrorCode::NonPositiveStep, "integration step must be > 0");
  EnergyBreakdown e;
  e.phases.reserve(cy.phases.size());
  for (const auto& ph : cy.phases) {
    const auto steps = static_cast<long>(std::max(1.0, std::ceil(ph.duration / dt - 1e-9)));
    const double h = ph.duration / static_cast<double>(steps);
    const double a = ph.is_ramp() ? ph.acceleration() : 0.0;
    auto power_at = [&](long k) {
      const double v = std::max(0.0, ph.v_start + a * h * static_cast<double>(k));
      return instantaneous_power(p, v, a);
    };

    double signed_sum = 0.0;
    double prev = power_at(0);
    for (long k = 1; k <= steps; ++k) {
      const double next = power_at(k);
      const double slice = 0.5 * (prev + next) * h;
      if (slice >= 0) {
        e.traction_total += slice;
      } else {
        e.braking_total -= slice;
      }
      signed_sum += slice;
      prev = next;
    }
    e.phases.push_back({ph.kind, ph.duration, signed_sum});
  }
  finish(p, m, e);
  return e;
}

void write_breakdown_csv(std::ostream& out, const EnergyBreakdown& e) {
  out << "phase_idx,kind,duration_s,wheel_energy_j\n";
  for (std::size_t i = 0; i < e.phases.size(); ++i) {
    const auto& ph = e.phases[i];
    out << i << ',' << to_string(ph.kind) << ',' << detail::format_number(ph.duration) << ','
        << detail::format_number(ph.wheel_energy) << '\n';
  }
  out << "battery_total_kwh,,," << detail::format_number(e.battery_total_kwh) << '\n';
}

void write_breakdown_csv(const std::filesystem::path& path, const EnergyBreakdown& e) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  write_breakdown_csv(out, e);
}

}  // namespace ecodrive
