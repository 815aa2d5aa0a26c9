#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "ecodrive/cycle.hpp"
#include "ecodrive/units.hpp"

namespace ecodrive {

// How drivetrain losses and regeneration compose into battery energy.
//   WheelNet:  (traction - eta_r * braking) / eta_drive
//   SplitPath: traction / eta_drive - eta_r * braking
enum class EfficiencyModel { WheelNet, SplitPath };

const char* to_string(EfficiencyModel m);

struct PhaseEnergy {
  PhaseKind kind;
  double duration;      // s
  double wheel_energy;  // J, negative for braking phases
};

struct EnergyBreakdown {
  std::vector<PhaseEnergy> phases;
  double traction_total = 0.0;  // J at the wheel, >= 0
  double braking_total = 0.0;   // J at the wheel available for recovery, >= 0
  double regen_total = 0.0;     // eta_r * braking_total
  double battery_total = 0.0;   // J
  double battery_total_kwh = 0.0;
};

// Closed-form phase energies: ramp_power or cruise_power times duration.
// Braking phases earn an eta_r-scaled credit on the full braking power.
EnergyBreakdown cycle_energy(const VehicleParams& p, const DrivingCycle& cy,
                             EfficiencyModel m = EfficiencyModel::WheelNet);

// F = 1 / (1 + E) with E in kWh; 0 for infeasible candidates.
double fitness(double energy_kwh, bool feasible);

// Independent check: trapezoidal quadrature of instantaneous_power along the
// piecewise constant-acceleration profile. Positive power is traction,
// negative power is braking energy eligible for regeneration. The base-speed
// kinetic correction is not modelled. Throws NonPositiveStep.
EnergyBreakdown numerical_energy(const VehicleParams& p, const DrivingCycle& cy,
                                 EfficiencyModel m, double dt);

// `phase_idx,kind,duration_s,wheel_energy_j` rows, then a
// `battery_total_kwh,,,<value>` summary row.
void write_breakdown_csv(std::ostream& out, const EnergyBreakdown& e);
void write_breakdown_csv(const std::filesystem::path& path, const EnergyBreakdown& e);

}  // namespace ecodrive
