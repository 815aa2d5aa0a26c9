#include "ecodrive/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "ecodrive/error.hpp"
#include "format.hpp"

namespace ecodrive {

const char* to_string(CaseId c) { return c == CaseId::CaseI ? "case1" : "case2"; }

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Ga: return "ga";
    case Algorithm::Shc: return "shc";
    case Algorithm::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

Problem make_problem(const RunSetup& setup, CaseId case_id, EfficiencyModel model) {
  return Problem{setup.vehicle,
                 case_id == CaseId::CaseI ? setup.case1_scenario() : setup.case2_scenario(),
                 model};
}

Layout layout_for(CaseId case_id) {
  return case_id == CaseId::CaseI ? case1_layout() : case2_layout();
}

GaConfig default_ga_config(CaseId case_id) {
  GaConfig cfg;
  if (case_id == CaseId::CaseII) {
    cfg.population_size = 100;
    cfg.mutation_prob = 0.5;
  }
  return cfg;
}

double default_bin_width(CaseId case_id) { return case_id == CaseId::CaseI ? 0.01 : 0.05; }

void ExperimentConfig::validate() const {
  if (runs < 1) throw Error(ErrorCode::InvalidConfig, "runs must be >= 1");
  if (bin_width && !(*bin_width > 0)) throw Error(ErrorCode::InvalidConfig, "bin width must be > 0");
  if (!(profile_step > 0)) throw Error(ErrorCode::InvalidConfig, "profile step must be > 0");
  if (algorithm == Algorithm::Ga) ga.validate();
}

std::pair<double, double> mean_and_sigma(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "no values");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

std::vector<HistogramBin> histogram(const std::vector<double>& energies, double bin_width) {
  if (energies.empty()) throw Error(ErrorCode::EmptyInput, "histogram needs at least one value");
  if (!(bin_width > 0)) throw Error(ErrorCode::NonPositiveBinWidth, "bin width must be > 0");
  std::map<long long, std::size_t> counts;
  for (double e : energies) {
    // The nudge keeps values that sit on a bin edge (0.95 / 0.01) out of the
    // bin below.
    ++counts[static_cast<long long>(std::floor(e / bin_width + 1e-9))];
  }
  std::vector<HistogramBin> out;
  for (const auto& [k, n] : counts) {
    out.push_back({static_cast<double>(k) * bin_width, static_cast<double>(k + 1) * bin_width, n});
  }
  return out;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  return out;
}

std::string two_digits(std::size_t i) {
  return i < 10 ? "0" + std::to_string(i) : std::to_string(i);
}

}  // namespace

void export_histogram(const std::vector<double>& energies, double bin_width,
                      const std::filesystem::path& path) {
  const auto bins = histogram(energies, bin_width);
  auto out = open_for_write(path);
  out << "bin_lo_kwh,bin_hi_kwh,count\n";
  for (const auto& b : bins) {
    out << detail::format_number(b.lo, 12) << ',' << detail::format_number(b.hi, 12) << ','
        << b.count << '\n';
  }
}

void export_best_profile(const ExperimentSummary& summary, const Problem& problem, double dt,
                         const std::filesystem::path& path) {
  if (!summary.best_params) throw Error(ErrorCode::InvalidConfig, "no best candidate to export");
  const BuildResult built = build_cycle(problem.scenario, *summary.best_params);
  const auto* cycle = std::get_if<DrivingCycle>(&built);
  if (cycle == nullptr) {
    throw Error(ErrorCode::InvalidConfig,
                std::string("best candidate is infeasible: ") +
                    to_string(std::get<Infeasible>(built).reason));
  }
  write_profile_csv(path, sample_profile(*cycle, dt));
}

void write_summary_csv(const std::filesystem::path& path, const ExperimentConfig& cfg,
                       const ExperimentSummary& summary) {
  auto out = open_for_write(path);
  out << "case,algo,runs,e_min_kwh,e_avg_kwh,sigma_kwh,alpha1,v1,beta1,v2,alpha2,v3,beta2\n";
  out << to_string(cfg.case_id) << ',' << to_string(cfg.algorithm) << ',' << cfg.runs << ','
      << detail::format_number(summary.e_min) << ',' << detail::format_number(summary.e_avg)
      << ',' << detail::format_number(summary.sigma);
  auto mph = [](double v) { return detail::format_number(units::mps_to_mph(v), 12); };
  if (!summary.best_params) {
    out << ",,,,,,,\n";
  } else if (const auto* p1 = std::get_if<CaseIParams>(&*summary.best_params)) {
    out << ',' << mph(p1->alpha) << ',' << mph(p1->speed) << ',' << mph(p1->beta) << ",,,,\n";
  } else {
    const auto& p2 = std::get<CaseIIParams>(*summary.best_params);
    out << ',' << mph(p2.alpha1) << ',' << mph(p2.v1) << ',' << mph(p2.beta1) << ','
        << mph(p2.v2) << ',' << mph(p2.alpha2) << ',' << mph(p2.v3) << ',' << mph(p2.beta2)
        << '\n';
  }
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Problem problem = make_problem(cfg.setup, cfg.case_id, cfg.model);
  const Objective objective = make_objective(problem, layout_for(cfg.case_id));

  ExperimentSummary summary;
  summary.reports.reserve(cfg.runs);
  for (std::size_t i = 0; i < cfg.runs; ++i) {
    const std::uint64_t seed = cfg.base_seed + i;
    switch (cfg.algorithm) {
      case Algorithm::Ga: {
        GaConfig ga = cfg.ga;
        ga.rng_seed = seed;
        summary.reports.push_back(run_ga(objective, ga));
        break;
      }
      case Algorithm::Shc: {
        ShcConfig shc = cfg.shc;
        shc.rng_seed = seed;
        summary.reports.push_back(run_shc(objective, shc));
        break;
      }
      case Algorithm::Exhaustive:
        summary.reports.push_back(run_exhaustive(objective));
        break;
    }
  }

  const RunReport* best = &summary.reports.front();
  for (const auto& r : summary.reports) {
    summary.per_run_energies.push_back(r.best.energy_kwh);
    if (r.best.fitness > best->best.fitness) best = &r;
  }
  summary.e_min = *std::min_element(summary.per_run_energies.begin(),
                                    summary.per_run_energies.end());
  std::tie(summary.e_avg, summary.sigma) = mean_and_sigma(summary.per_run_energies);
  summary.best_params = best->best_params;
  summary.best_chromosome = best->best_chromosome;

  std::filesystem::create_directories(cfg.out_dir);
  const std::string prefix = std::string(to_string(cfg.case_id)) + "_" + to_string(cfg.algorithm);
  auto path = [&](const std::string& name) { return cfg.out_dir / (prefix + "_" + name); };

  write_summary_csv(path("summary.csv"), cfg, summary);
  summary.files.push_back(path("summary.csv"));

  {
    auto out = open_for_write(path("runs.csv"));
    out << "run,seed,e_min_kwh,fitness,evaluations,chromosome\n";
    for (std::size_t i = 0; i < summary.reports.size(); ++i) {
      const auto& r = summary.reports[i];
      out << i << ',' << cfg.base_seed + i << ',' << detail::format_number(r.best.energy_kwh)
          << ',' << detail::format_number(r.best.fitness) << ',' << r.evaluations << ','
          << r.best_chromosome.to_string() << '\n';
    }
    summary.files.push_back(path("runs.csv"));
  }

  export_histogram(summary.per_run_energies, cfg.bin_width.value_or(default_bin_width(cfg.case_id)),
                   path("histogram.csv"));
  summary.files.push_back(path("histogram.csv"));

  for (std::size_t i = 0; i < summary.reports.size(); ++i) {
    const auto p = path("trace_run" + two_digits(i) + ".csv");
    write_trace_csv(p, summary.reports[i]);
    summary.files.push_back(p);
  }

  if (best->best.feasible) {
    export_best_profile(summary, problem, cfg.profile_step, path("best_profile.csv"));
    summary.files.push_back(path("best_profile.csv"));
  }
  return summary;
}

}  // namespace ecodrive
