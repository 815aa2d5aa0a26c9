// Command-line front end: evaluate, optimize, experiment, profile.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecodrive/config.hpp"
#include "ecodrive/energy.hpp"
#include "ecodrive/error.hpp"
#include "ecodrive/experiment.hpp"

namespace {

using namespace ecodrive;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct GlobalOptions {
  std::string config_path;
  EfficiencyModel model = EfficiencyModel::WheelNet;
  std::filesystem::path out_dir = ".";
};

// Candidate given on the command line, either as bits or per-field values in
// mph and mph/s.
struct CandidateOptions {
  std::string bits;
  std::optional<double> alpha, beta, v;
  std::optional<double> alpha1, v1, beta1, v2, alpha2, v3, beta2;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--bits", bits, "Chromosome as a 0/1 string, MSB first");
    cmd->add_option("--alpha", alpha, "Case I acceleration [mph/s]");
    cmd->add_option("--beta", beta, "Case I retardation [mph/s]");
    cmd->add_option("--v", v, "Case I cruise speed [mph]");
    cmd->add_option("--alpha1", alpha1, "Case II first acceleration [mph/s]");
    cmd->add_option("--v1", v1, "Case II first cruise speed [mph]");
    cmd->add_option("--beta1", beta1, "Case II first retardation [mph/s]");
    cmd->add_option("--v2", v2, "Case II restricted cruise speed [mph]");
    cmd->add_option("--alpha2", alpha2, "Case II second acceleration [mph/s]");
    cmd->add_option("--v3", v3, "Case II last cruise speed [mph]");
    cmd->add_option("--beta2", beta2, "Case II last retardation [mph/s]");
  }

  bool given() const {
    return !bits.empty() || alpha || beta || v || alpha1 || v1 || beta1 || v2 || alpha2 || v3 ||
           beta2;
  }

  CandidateParams resolve(CaseId case_id) const {
    if (!bits.empty()) return decode(Chromosome::from_string(bits), layout_for(case_id));
    auto need = [](const std::optional<double>& x, const char* name) {
      if (!x) throw Error(ErrorCode::InvalidConfig, std::string("missing --") + name);
      return units::mph_to_mps(*x);
    };
    if (case_id == CaseId::CaseI) {
      return CaseIParams{need(alpha, "alpha"), need(beta, "beta"), need(v, "v")};
    }
    return CaseIIParams{need(alpha1, "alpha1"), need(v1, "v1"),         need(beta1, "beta1"),
                        need(v2, "v2"),         need(alpha2, "alpha2"), need(v3, "v3"),
                        need(beta2, "beta2")};
  }
};

struct SearchOptions {
  CaseId case_id = CaseId::CaseI;
  Algorithm algorithm = Algorithm::Ga;
  std::optional<std::size_t> population, generations, elites;
  std::optional<double> crossover_prob, mutation_prob;
  std::size_t shc_iterations = ShcConfig{}.max_iterations;
  ShcNeighborhood neighborhood = ShcNeighborhood::BitFlip;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--algo", algorithm, "ga | shc | exhaustive")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Algorithm>{{"ga", Algorithm::Ga},
                                             {"shc", Algorithm::Shc},
                                             {"exhaustive", Algorithm::Exhaustive}},
            CLI::ignore_case));
    cmd->add_option("--population", population, "GA population size");
    cmd->add_option("--generations", generations, "GA generations");
    cmd->add_option("--crossover-prob", crossover_prob, "GA crossover probability");
    cmd->add_option("--mutation-prob", mutation_prob, "GA per-offspring mutation probability");
    cmd->add_option("--elites", elites, "GA elite count");
    cmd->add_option("--shc-iterations", shc_iterations, "Hill-climber iterations");
    cmd->add_option("--shc-neighborhood", neighborhood, "bit-flip | uniform")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ShcNeighborhood>{{"bit-flip", ShcNeighborhood::BitFlip},
                                                   {"uniform", ShcNeighborhood::UniformRestart}},
            CLI::ignore_case));
  }

  GaConfig ga_config() const {
    GaConfig cfg = default_ga_config(case_id);
    if (population) cfg.population_size = *population;
    if (generations) cfg.generations = *generations;
    if (elites) cfg.elite_count = *elites;
    if (crossover_prob) cfg.crossover_prob = *crossover_prob;
    if (mutation_prob) cfg.mutation_prob = *mutation_prob;
    return cfg;
  }

  ShcConfig shc_config() const { return ShcConfig{shc_iterations, neighborhood, 0}; }
};

void add_case_option(CLI::App* cmd, CaseId& case_id) {
  cmd->add_option("--case", case_id, "1 (open road) or 2 (restricted middle mile)")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, CaseId>{{"1", CaseId::CaseI}, {"2", CaseId::CaseII}}));
}

RunSetup load_setup(const GlobalOptions& g) {
  return g.config_path.empty() ? RunSetup{} : load_config(g.config_path);
}

std::string describe(const CandidateParams& params) {
  auto mph = [](double v) { return std::to_string(units::mps_to_mph(v)); };
  if (const auto* p = std::get_if<CaseIParams>(&params)) {
    return "alpha=" + mph(p->alpha) + " mph/s, beta=" + mph(p->beta) + " mph/s, V=" +
           mph(p->speed) + " mph";
  }
  const auto& p = std::get<CaseIIParams>(params);
  return "alpha1=" + mph(p.alpha1) + ", V1=" + mph(p.v1) + ", beta1=" + mph(p.beta1) +
         ", V2=" + mph(p.v2) + ", alpha2=" + mph(p.alpha2) + ", V3=" + mph(p.v3) +
         ", beta2=" + mph(p.beta2) + " (mph, mph/s)";
}

RunReport run_search(const Objective& objective, const SearchOptions& s, std::uint64_t seed) {
  switch (s.algorithm) {
    case Algorithm::Ga: {
      GaConfig cfg = s.ga_config();
      cfg.rng_seed = seed;
      return run_ga(objective, cfg);
    }
    case Algorithm::Shc: {
      ShcConfig cfg = s.shc_config();
      cfg.rng_seed = seed;
      return run_shc(objective, cfg);
    }
    case Algorithm::Exhaustive:
      return run_exhaustive(objective);
  }
  return {};
}

int cmd_evaluate(const GlobalOptions& g, CaseId case_id, const CandidateOptions& cand) {
  const Problem problem = make_problem(load_setup(g), case_id, g.model);
  const CandidateParams params = cand.resolve(case_id);
  std::cout << "candidate: " << describe(params) << '\n';
  const BuildResult built = build_cycle(problem.scenario, params);
  if (const auto* bad = std::get_if<Infeasible>(&built)) {
    std::cout << "infeasible: " << to_string(bad->reason);
    if (bad->total_time) std::cout << " (total time " << *bad->total_time << " s)";
    std::cout << '\n';
    return kExitInfeasible;
  }
  const auto& cycle = std::get<DrivingCycle>(built);
  const EnergyBreakdown e = cycle_energy(problem.vehicle, cycle, g.model);
  std::cout << "total time: " << cycle.total_time() << " s\n"
            << "battery energy: " << e.battery_total_kwh << " kWh (" << to_string(g.model)
            << ")\n"
            << "fitness: " << fitness(e.battery_total_kwh, true) << '\n';
  std::filesystem::create_directories(g.out_dir);
  const auto path = g.out_dir / (std::string(to_string(case_id)) + "_breakdown.csv");
  write_breakdown_csv(path, e);
  std::cout << "breakdown: " << path.string() << '\n';
  return kExitOk;
}

int cmd_optimize(const GlobalOptions& g, const SearchOptions& s, std::uint64_t seed) {
  const Problem problem = make_problem(load_setup(g), s.case_id, g.model);
  const Objective objective = make_objective(problem, layout_for(s.case_id));
  const RunReport r = run_search(objective, s, seed);
  std::cout << "algorithm: " << to_string(s.algorithm) << ", seed " << seed << '\n'
            << "best chromosome: " << r.best_chromosome.to_string() << '\n';
  if (r.best_params) std::cout << "best parameters: " << describe(*r.best_params) << '\n';
  std::cout << "best energy: " << r.best.energy_kwh << " kWh, fitness " << r.best.fitness << '\n'
            << "evaluations: " << r.evaluations << '\n';
  std::filesystem::create_directories(g.out_dir);
  const auto path = g.out_dir / (std::string(to_string(s.case_id)) + "_" +
                                 to_string(s.algorithm) + "_seed" + std::to_string(seed) +
                                 "_trace.csv");
  write_trace_csv(path, r);
  std::cout << "trace: " << path.string() << '\n';
  return r.best.feasible ? kExitOk : kExitInfeasible;
}

int cmd_experiment(const GlobalOptions& g, const SearchOptions& s, std::size_t runs,
                   std::uint64_t base_seed, std::optional<double> bin_width) {
  ExperimentConfig cfg;
  cfg.case_id = s.case_id;
  cfg.algorithm = s.algorithm;
  cfg.runs = runs;
  cfg.base_seed = base_seed;
  cfg.ga = s.ga_config();
  cfg.shc = s.shc_config();
  cfg.model = g.model;
  cfg.setup = load_setup(g);
  cfg.out_dir = g.out_dir;
  cfg.bin_width = bin_width;
  const ExperimentSummary summary = run_experiment(cfg);
  std::cout << to_string(cfg.case_id) << ' ' << to_string(cfg.algorithm) << " over " << runs
            << " runs\n"
            << "E_min: " << summary.e_min << " kWh\n"
            << "E_avg: " << summary.e_avg << " kWh\n"
            << "sigma: " << summary.sigma << " kWh\n";
  if (summary.best_params) std::cout << "best parameters: " << describe(*summary.best_params) << '\n';
  for (const auto& f : summary.files) std::cout << "wrote " << f.string() << '\n';
  return kExitOk;
}

int cmd_profile(const GlobalOptions& g, const SearchOptions& s, const CandidateOptions& cand,
                std::uint64_t seed, double dt) {
  const Problem problem = make_problem(load_setup(g), s.case_id, g.model);
  ExperimentSummary summary;
  if (cand.given()) {
    summary.best_params = cand.resolve(s.case_id);
  } else {
    const RunReport r = run_search(make_objective(problem, layout_for(s.case_id)), s, seed);
    summary.best_params = r.best_params;
  }
  std::cout << "profile for: " << describe(*summary.best_params) << '\n';
  std::filesystem::create_directories(g.out_dir);
  const auto path = g.out_dir / (std::string(to_string(s.case_id)) + "_profile.csv");
  export_best_profile(summary, problem, dt, path);
  std::cout << "wrote " << path.string() << '\n';
  return kExitOk;
}

bool is_config_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfig:
    case ErrorCode::InvalidParams:
    case ErrorCode::InvalidScenario:
    case ErrorCode::LayoutMismatch:
    case ErrorCode::LengthMismatch:
    case ErrorCode::SpaceTooLarge:
    case ErrorCode::NonPositiveStep:
    case ErrorCode::NonPositiveBinWidth:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-energy driving profiles for an electric vehicle with regenerative braking"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--config", global.config_path, "key = value parameter file")
      ->check(CLI::ExistingFile);
  app.add_option("--efficiency-model", global.model, "wheel-net | split-path")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EfficiencyModel>{{"wheel-net", EfficiencyModel::WheelNet},
                                                 {"split-path", EfficiencyModel::SplitPath}},
          CLI::ignore_case));
  app.add_option("--out-dir", global.out_dir, "Directory for CSV output");
  app.fallthrough();

  CaseId eval_case = CaseId::CaseI;
  CandidateOptions eval_cand;
  auto* evaluate = app.add_subcommand("evaluate", "Energy of one explicit candidate");
  add_case_option(evaluate, eval_case);
  eval_cand.add_to(evaluate);

  SearchOptions opt_search;
  std::uint64_t opt_seed = 1;
  auto* optimize = app.add_subcommand("optimize", "Single optimizer run");
  add_case_option(optimize, opt_search.case_id);
  opt_search.add_to(optimize);
  optimize->add_option("--seed", opt_seed, "RNG seed");

  SearchOptions exp_search;
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;
  std::optional<double> bin_width;
  auto* experiment = app.add_subcommand("experiment", "Seeded multi-run experiment with CSV output");
  add_case_option(experiment, exp_search.case_id);
  exp_search.add_to(experiment);
  experiment->add_option("--runs", runs, "Number of runs")->check(CLI::PositiveNumber);
  experiment->add_option("--base-seed", base_seed, "Run i uses base-seed + i");
  experiment->add_option("--bin-width", bin_width, "Histogram bin width [kWh]");

  SearchOptions prof_search;
  CandidateOptions prof_cand;
  std::uint64_t prof_seed = 1;
  double dt = 1.0;
  auto* profile = app.add_subcommand("profile", "Export the speed profile of the best candidate");
  add_case_option(profile, prof_search.case_id);
  prof_search.algorithm = Algorithm::Exhaustive;
  prof_search.add_to(profile);
  prof_cand.add_to(profile);
  profile->add_option("--seed", prof_seed, "RNG seed");
  profile->add_option("--dt", dt, "Sample step [s]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*evaluate) return cmd_evaluate(global, eval_case, eval_cand);
    if (*optimize) return cmd_optimize(global, opt_search, opt_seed);
    if (*experiment) return cmd_experiment(global, exp_search, runs, base_seed, bin_width);
    if (*profile) {
      if (prof_search.case_id == CaseId::CaseII && prof_search.algorithm == Algorithm::Exhaustive &&
          !prof_cand.given()) {
        prof_search.algorithm = Algorithm::Ga;
      }
      return cmd_profile(global, prof_search, prof_cand, prof_seed, dt);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_config_error(e.code()) ? kExitConfig : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
