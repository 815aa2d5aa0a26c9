// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <bitset>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ecodrive/experiment.hpp"

namespace {

using namespace ecodrive;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Reference values from the published result tables.
constexpr double kCase1GaEnergy = 0.9285;   // kWh
constexpr double kCase1ShcEnergy = 0.9361;  // kWh
constexpr double kCase2GaEnergy = 0.8060;   // kWh

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

Problem problem_for(CaseId c) { return make_problem(RunSetup{}, c, EfficiencyModel::WheelNet); }

Objective objective_for(CaseId c) { return make_objective(problem_for(c), layout_for(c)); }

CaseIParams case1(double alpha, double beta, double v) {
  return {units::mph_to_mps(alpha), units::mph_to_mps(beta), units::mph_to_mps(v)};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "ecodrive_acceptance" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome exhaustive_case1() {
  const Objective obj = objective_for(CaseId::CaseI);
  const auto start = Clock::now();
  const RunReport r = run_exhaustive(obj);
  const double elapsed = seconds_since(start);
  const auto v = field_values(r.best_chromosome, obj.layout);
  const bool params = near(v[0], 8.0) && near(v[1], 0.5) && near(v[2], 49.6);
  return {r.evaluations == 16384 && elapsed < 1.0 && params,
          fmt("%llu chromosomes in %.3f s, best (%.4g, %.4g, %.4g)",
              static_cast<unsigned long long>(r.evaluations), elapsed, v[0], v[1], v[2])};
}

Outcome energy_case1() {
  const RunReport r = run_exhaustive(objective_for(CaseId::CaseI));
  const Evaluation shc = evaluate_candidate(problem_for(CaseId::CaseI), case1(8, 0.5, 50.4));
  const double err_opt = std::abs(r.best.energy_kwh - kCase1GaEnergy) / kCase1GaEnergy;
  const double err_shc = std::abs(shc.energy_kwh - kCase1ShcEnergy) / kCase1ShcEnergy;
  return {err_opt <= 0.01 && err_shc <= 0.01,
          fmt("optimum %.4f kWh (%.2f%% from %.4f), (8,0.5,50.4) %.4f kWh (%.2f%% from %.4f)",
              r.best.energy_kwh, 100 * err_opt, kCase1GaEnergy, shc.energy_kwh, 100 * err_shc,
              kCase1ShcEnergy)};
}

Outcome ga_case1() {
  const RunReport exact = run_exhaustive(objective_for(CaseId::CaseI));
  ExperimentConfig cfg;
  cfg.case_id = CaseId::CaseI;
  cfg.algorithm = Algorithm::Ga;
  cfg.runs = 30;
  cfg.base_seed = 1;
  cfg.ga = default_ga_config(CaseId::CaseI);
  cfg.out_dir = scratch("ga_case1");
  const auto start = Clock::now();
  const ExperimentSummary s = run_experiment(cfg);
  const double elapsed = seconds_since(start);
  int hits = 0;
  for (const auto& r : s.reports) hits += r.best_chromosome == exact.best_chromosome;
  const bool exact_min = s.e_min == exact.best.energy_kwh;
  return {exact_min && hits * 10 >= 8 * 30 && elapsed < 10.0,
          fmt("min over runs %.6f vs oracle %.6f (%s), %d/30 runs hit it, %.2f s", s.e_min,
              exact.best.energy_kwh, exact_min ? "equal" : "differ", hits, elapsed)};
}

Outcome feasibility_edge() {
  const Scenario sc = reference_scenario_case1();
  const BuildResult slow = build_case1(sc, case1(8, 0.5, 48.8));
  const BuildResult edge = build_case1(sc, case1(8, 0.5, 49.6));
  const auto* bad = std::get_if<Infeasible>(&slow);
  const auto* good = std::get_if<DrivingCycle>(&edge);
  const bool slow_ok = bad && bad->reason == InfeasibleReason::TimeExceeded && bad->total_time &&
                       *bad->total_time >= 420.5 && *bad->total_time <= 421.0;
  const bool edge_ok =
      good && good->total_time() >= 415.3 && good->total_time() <= 415.9;
  return {slow_ok && edge_ok,
          fmt("48.8 mph: %s %.3f s; 49.6 mph: %s %.3f s",
              bad ? to_string(bad->reason) : "feasible",
              bad && bad->total_time ? *bad->total_time : NAN, good ? "feasible" : "infeasible",
              good ? good->total_time() : NAN)};
}

Outcome case2_direction() {
  ExperimentConfig cfg;
  cfg.case_id = CaseId::CaseII;
  cfg.runs = 30;
  cfg.base_seed = 1;
  cfg.algorithm = Algorithm::Ga;
  cfg.ga = default_ga_config(CaseId::CaseII);
  cfg.out_dir = scratch("case2_ga");
  const ExperimentSummary ga = run_experiment(cfg);

  cfg.algorithm = Algorithm::Shc;
  cfg.shc.max_iterations = ga.reports.front().evaluations - 1;
  cfg.out_dir = scratch("case2_shc");
  const ExperimentSummary shc = run_experiment(cfg);

  const double err = std::abs(ga.e_min - kCase2GaEnergy) / kCase2GaEnergy;
  const bool ok = ga.e_min <= shc.e_min && ga.sigma < shc.sigma && err <= 0.10 &&
                  ga.reports.front().evaluations == shc.reports.front().evaluations;
  return {ok, fmt("GA e_min %.4f sigma %.4f | SHC e_min %.4f sigma %.4f | %llu evals each | "
                  "GA %.1f%% from %.4f",
                  ga.e_min, ga.sigma, shc.e_min, shc.sigma,
                  static_cast<unsigned long long>(ga.reports.front().evaluations), 100 * err,
                  kCase2GaEnergy)};
}

Outcome table3_coverage() {
  const Layout l = case2_layout();
  // Field order: alpha1, v1, beta1, v2, alpha2, v3, beta2. Values from the
  // two rows of the Case II table.
  const std::vector<std::vector<double>> wanted = {
      {4.5, 8.0}, {75.0}, {0.5}, {25.0}, {0.5, 2.0}, {75.0}, {4.5, 1.0}};
  int found = 0, total = 0;
  for (std::size_t f = 0; f < l.fields.size(); ++f) {
    const Field& field = l.fields[f];
    for (double target : wanted[f]) {
      ++total;
      for (std::uint64_t i = 0; i < field.cardinality(); ++i) {
        if (near(field.decode.value(i, field.width), target)) {
          ++found;
          break;
        }
      }
    }
  }
  return {found == total, fmt("%d/%d table values on their field grids", found, total)};
}

Outcome property_suite() {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failed.emplace_back(what);
  };
  Rng rng(20240101);

  bool conserve = true, hamming = true;
  for (int i = 0; i < 10000; ++i) {
    const Chromosome a = random_chromosome(case2_layout(), rng);
    const Chromosome b = random_chromosome(case2_layout(), rng);
    const auto [c, d] = crossover(a, b, rng);
    conserve &= c.size() == a.size() && (c.value() ^ d.value()) == (a.value() ^ b.value()) &&
                (c.value() & d.value()) == (a.value() & b.value());
    hamming &= std::bitset<64>(a.value() ^ mutate(a, rng).value()).count() == 1;
  }
  expect(conserve, "crossover bit conservation");
  expect(hamming, "mutation Hamming distance 1");

  bool elitism = true, shc_mono = true, repro = true;
  for (CaseId c : {CaseId::CaseI, CaseId::CaseII}) {
    const Objective obj = objective_for(c);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GaConfig ga = default_ga_config(c);
      ga.rng_seed = seed;
      const RunReport r = run_ga(obj, ga);
      for (std::size_t g = 1; g < r.trace.size(); ++g)
        elitism &= r.trace[g].best_fitness >= r.trace[g - 1].best_fitness;
      repro &= r == run_ga(obj, ga);

      ShcConfig shc;
      shc.rng_seed = seed;
      const RunReport h = run_shc(obj, shc);
      for (std::size_t g = 1; g < h.trace.size(); ++g)
        shc_mono &= h.trace[g].best_fitness >= h.trace[g - 1].best_fitness;
      repro &= h == run_shc(obj, shc);
    }
  }
  expect(elitism, "elitism best-fitness monotonicity");
  expect(shc_mono, "SHC incumbent monotonicity");
  expect(repro, "fixed-seed RunReport reproducibility");

  ExperimentConfig cfg;
  cfg.runs = 5;
  cfg.ga.generations = 30;
  cfg.out_dir = scratch("repro_a");
  const auto first = run_experiment(cfg);
  cfg.out_dir = scratch("repro_b");
  run_experiment(cfg);
  bool files = !first.files.empty();
  for (const auto& f : first.files) files &= slurp(f) == slurp(cfg.out_dir / f.filename());
  expect(files, "byte-identical experiment files");

  bool round_trip = true;
  const Layout l1 = case1_layout();
  std::uint64_t n = 0;
  for (const Chromosome c : enumerate_all(l1)) {
    round_trip &= encode(decode(c, l1), l1) == c;
    ++n;
  }
  expect(round_trip && n == 16384, "decode/encode round trip over 16,384 chromosomes");

  bool distance = true;
  int feasible = 0;
  Scenario sc1 = reference_scenario_case1();
  sc1.max_time = 5000.0;
  std::uniform_real_distribution<double> rate(0.25, 8.0), speed(1.0, 75.0);
  while (feasible < 1000) {
    const BuildResult r = build_case1(sc1, case1(rate(rng), rate(rng), speed(rng)));
    if (const auto* cy = std::get_if<DrivingCycle>(&r)) {
      distance &= std::abs(cy->total_distance() - sc1.total_distance) <= 1e-6 * sc1.total_distance;
      ++feasible;
    }
  }
  expect(distance, "cycle distance = S for 1,000 random feasible candidates");

  std::string detail = failed.empty() ? "8/8 properties hold" : "failed:";
  for (const auto& f : failed) detail += " [" + f + "]";
  return {failed.empty(), detail};
}

Outcome oracle_cross_check() {
  const VehicleParams p = reference_vehicle();
  DrivingCycle flat;
  flat.scenario = reference_scenario_case1();
  flat.phases = {{PhaseKind::Cruise, 20.0, 20.0, 300.0, 6000.0}};
  const double closed_flat = cycle_energy(p, flat).battery_total;
  const double num_flat = numerical_energy(p, flat, EfficiencyModel::WheelNet, 0.01).battery_total;
  const double flat_err = std::abs(num_flat - closed_flat) / closed_flat;

  const auto cy = std::get<DrivingCycle>(build_case1(reference_scenario_case1(), case1(8, 0.5, 49.6)));
  const double closed = cycle_energy(p, cy).battery_total_kwh;
  const double num = numerical_energy(p, cy, EfficiencyModel::WheelNet, 0.01).battery_total_kwh;
  const double half = numerical_energy(p, cy, EfficiencyModel::WheelNet, 0.005).battery_total_kwh;
  const double opt_err = std::abs(num - closed) / closed;
  const double step_change = std::abs(half - num) / num;
  return {flat_err <= 1e-6 && opt_err <= 0.15 && step_change < 1e-3,
          fmt("cruise rel err %.2e; optimum numeric %.4f vs closed %.4f (%.1f%%); "
              "halving dt changes %.2e",
              flat_err, num, closed, 100 * opt_err, step_change)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 exhaustive oracle, case I", exhaustive_case1},
      {"2 energy values, case I", energy_case1},
      {"3 GA correctness, case I", ga_case1},
      {"4 feasibility edge", feasibility_edge},
      {"5 case II GA vs SHC direction", case2_direction},
      {"6 case II decode coverage", table3_coverage},
      {"7 property suite", property_suite},
      {"8 numerical oracle cross-check", oracle_cross_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s  %-32s %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
