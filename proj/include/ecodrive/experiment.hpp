#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "ecodrive/config.hpp"
#include "ecodrive/optimizers.hpp"

namespace ecodrive {

enum class CaseId { CaseI, CaseII };
enum class Algorithm { Ga, Shc, Exhaustive };

const char* to_string(CaseId c);
const char* to_string(Algorithm a);

// Scenario and layout for a case under the given setup.
Problem make_problem(const RunSetup& setup, CaseId case_id, EfficiencyModel model);
Layout layout_for(CaseId case_id);

// Case I uses GaConfig's defaults. Case II's feasible region is about 1% of
// its 2^32 space, so it gets a larger population and more mutation to keep
// every seeded run from stalling on an all-infeasible population.
GaConfig default_ga_config(CaseId case_id);

// Histogram bin width in kWh when none is given: 0.01 for Case I, 0.05 for
// Case II.
double default_bin_width(CaseId case_id);

struct ExperimentConfig {
  CaseId case_id = CaseId::CaseI;
  Algorithm algorithm = Algorithm::Ga;
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;  // run i uses base_seed + i
  GaConfig ga;
  ShcConfig shc;
  EfficiencyModel model = EfficiencyModel::WheelNet;
  RunSetup setup;
  std::filesystem::path out_dir = ".";
  std::optional<double> bin_width;  // kWh
  double profile_step = 1.0;        // s

  // Throws InvalidConfig.
  void validate() const;
};

struct ExperimentSummary {
  double e_min = 0.0;  // kWh
  double e_avg = 0.0;  // kWh, mean of per-run minima
  double sigma = 0.0;  // kWh, sample standard deviation (n - 1)
  std::optional<CandidateParams> best_params;
  Chromosome best_chromosome;
  std::vector<double> per_run_energies;
  std::vector<RunReport> reports;
  std::vector<std::filesystem::path> files;
};

// Runs one optimizer run per seed. Stats are reduced in run order. Writes
// <case>_<algo>_{summary,runs,histogram,best_profile}.csv and one
// <case>_<algo>_trace_runNN.csv per run into out_dir.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

// Mean and sample standard deviation; sigma is 0 for a single value.
std::pair<double, double> mean_and_sigma(const std::vector<double>& values);

struct HistogramBin {
  double lo;
  double hi;
  std::size_t count;
};

// Non-empty bins aligned to multiples of bin_width, ascending. Throws
// EmptyInput or NonPositiveBinWidth.
std::vector<HistogramBin> histogram(const std::vector<double>& energies, double bin_width);

// `bin_lo_kwh,bin_hi_kwh,count`.
void export_histogram(const std::vector<double>& energies, double bin_width,
                      const std::filesystem::path& path);

// Writes the `t_s,v_mph` profile of the summary's best candidate. Throws
// InvalidConfig if the candidate is missing or infeasible.
void export_best_profile(const ExperimentSummary& summary, const Problem& problem, double dt,
                         const std::filesystem::path& path);

// `case,algo,runs,e_min_kwh,e_avg_kwh,sigma_kwh,alpha1,v1,beta1,v2,alpha2,v3,beta2`
// with parameters in mph and mph/s. Case I fills alpha1, v1, beta1 and
// leaves the rest empty.
void write_summary_csv(const std::filesystem::path& path, const ExperimentConfig& cfg,
                       const ExperimentSummary& summary);

}  // namespace ecodrive
