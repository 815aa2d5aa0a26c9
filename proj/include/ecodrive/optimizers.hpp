#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ecodrive/cycle.hpp"
#include "ecodrive/encoding.hpp"
#include "ecodrive/energy.hpp"

namespace ecodrive {

struct Evaluation {
  double fitness = 0.0;
  double energy_kwh = std::numeric_limits<double>::infinity();
  bool feasible = false;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// What the search algorithms see: a bit layout and a pure fitness function.
struct Objective {
  Layout layout;
  std::function<Evaluation(const Chromosome&)> evaluate;
};

struct Problem {
  VehicleParams vehicle;
  Scenario scenario;
  EfficiencyModel model = EfficiencyModel::WheelNet;
};

// Builds the cycle and evaluates its battery energy; infeasible candidates
// get fitness 0 and infinite energy.
Evaluation evaluate_candidate(const Problem& problem, const CandidateParams& params);

// Decodes with `layout` and evaluates against `problem`.
Objective make_objective(const Problem& problem, const Layout& layout);

struct GaConfig {
  std::size_t population_size = 40;
  std::size_t generations = 100;
  double crossover_prob = 0.8;
  // Chance that an offspring receives one single-bit flip.
  double mutation_prob = 0.2;
  std::size_t elite_count = 2;
  std::uint64_t rng_seed = 1;

  // Throws InvalidConfig.
  void validate() const;
};

enum class ShcNeighborhood { BitFlip, UniformRestart };

struct ShcConfig {
  std::size_t max_iterations = 2000;
  ShcNeighborhood neighborhood = ShcNeighborhood::BitFlip;
  std::uint64_t rng_seed = 1;
};

struct TracePoint {
  double best_fitness;
  double mean_fitness;
  double best_energy_kwh;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunReport {
  Chromosome best_chromosome;
  std::optional<CandidateParams> best_params;  // unset for generic layouts
  Evaluation best;
  std::uint64_t evaluations = 0;
  // One point per generation (GA), per iteration (SHC) or a single point
  // (exhaustive).
  std::vector<TracePoint> trace;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Swaps every bit at position >= cut between the parents. cut in [1, n-1].
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& p1, const Chromosome& p2,
                                               std::size_t cut);
// Cut drawn uniformly from {1..n-1}; parents shorter than 2 bits are copied.
// Throws LengthMismatch.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1, const Chromosome& p2, Rng& rng);

// Flips one uniformly chosen bit.
Chromosome mutate(const Chromosome& c, Rng& rng);

// Indices into `population` for the next generation's parents. The first
// cfg.elite_count entries are the elites, best first (ties: lower unsigned
// value). The rest are roulette draws proportional to fitness, or uniform
// when every fitness is zero. Throws SizeMismatch.
std::vector<std::size_t> select_elitist(const std::vector<Chromosome>& population,
                                        const std::vector<double>& fitnesses,
                                        const GaConfig& cfg, Rng& rng);

// Generational GA: elites pass unchanged, the remaining slots are filled by
// roulette-selected parents paired for single-point crossover and
// single-bit mutation. Only new individuals are evaluated.
RunReport run_ga(const Objective& objective, const GaConfig& cfg);

// Accepts the neighbour when its fitness is >= the incumbent's and returns
// the final incumbent.
RunReport run_shc(const Objective& objective, const ShcConfig& cfg);

// Global optimum by enumeration; ties go to the lower unsigned value.
// Throws SpaceTooLarge past `max_bits`.
RunReport run_exhaustive(const Objective& objective,
                         std::size_t max_bits = kDefaultEnumerationGuard);

// `generation,best_fitness,mean_fitness,best_energy_kwh`.
void write_trace_csv(std::ostream& out, const RunReport& report);
void write_trace_csv(const std::filesystem::path& path, const RunReport& report);

}  // namespace ecodrive
