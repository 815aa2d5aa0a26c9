#include "ecodrive/optimizers.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "ecodrive/error.hpp"
#include "format.hpp"

namespace ecodrive {

Evaluation evaluate_candidate(const Problem& problem, const CandidateParams& params) {
  const BuildResult built = build_cycle(problem.scenario, params);
  const auto* cycle = std::get_if<DrivingCycle>(&built);
  if (cycle == nullptr) return Evaluation{};
  const double e = cycle_energy(problem.vehicle, *cycle, problem.model).battery_total_kwh;
  return Evaluation{fitness(e, true), e, true};
}

Objective make_objective(const Problem& problem, const Layout& layout) {
  layout.validate();
  if (layout.kind == LayoutKind::Generic) {
    throw Error(ErrorCode::LayoutMismatch, "eco-driving objectives need a case layout");
  }
  return Objective{layout, [problem, layout](const Chromosome& c) {
                     return evaluate_candidate(problem, decode(c, layout));
                   }};
}

void GaConfig::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (population_size < 2) fail("population_size must be >= 2");
  if (!(crossover_prob >= 0 && crossover_prob <= 1)) fail("crossover_prob must be in [0, 1]");
  if (!(mutation_prob >= 0 && mutation_prob <= 1)) fail("mutation_prob must be in [0, 1]");
  if (elite_count >= population_size) fail("elite_count must be < population_size");
}

namespace {

// Strictly better, or equally fit with a lower unsigned value.
bool better(const Evaluation& a, const Chromosome& ca, const Evaluation& b,
            const Chromosome& cb) {
  if (a.fitness != b.fitness) return a.fitness > b.fitness;
  return ca.value() < cb.value();
}

RunReport start_report(const Objective& objective, const Chromosome& c, const Evaluation& e) {
  RunReport r;
  r.best_chromosome = c;
  r.best = e;
  if (objective.layout.kind != LayoutKind::Generic) r.best_params = decode(c, objective.layout);
  return r;
}

void offer(RunReport& r, const Objective& objective, const Chromosome& c, const Evaluation& e) {
  if (!better(e, c, r.best, r.best_chromosome)) return;
  r.best_chromosome = c;
  r.best = e;
  if (objective.layout.kind != LayoutKind::Generic) r.best_params = decode(c, objective.layout);
}

bool coin(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& p1, const Chromosome& p2,
                                               std::size_t cut) {
  if (p1.size() != p2.size()) throw Error(ErrorCode::LengthMismatch, "parents differ in length");
  const std::size_t n = p1.size();
  if (cut == 0 || cut >= n) throw Error(ErrorCode::LengthMismatch, "cut must lie in [1, n-1]");
  const std::uint64_t suffix = (std::uint64_t{1} << (n - cut)) - 1;
  const std::uint64_t a = (p1.value() & ~suffix) | (p2.value() & suffix);
  const std::uint64_t b = (p2.value() & ~suffix) | (p1.value() & suffix);
  return {Chromosome(a, n), Chromosome(b, n)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1, const Chromosome& p2,
                                            Rng& rng) {
  if (p1.size() != p2.size()) throw Error(ErrorCode::LengthMismatch, "parents differ in length");
  if (p1.size() < 2) return {p1, p2};
  std::uniform_int_distribution<std::size_t> pick(1, p1.size() - 1);
  return crossover_at(p1, p2, pick(rng));
}

Chromosome mutate(const Chromosome& c, Rng& rng) {
  if (c.size() == 0) throw Error(ErrorCode::LengthMismatch, "cannot mutate an empty chromosome");
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  return c.with_flipped(pick(rng));
}

std::vector<std::size_t> select_elitist(const std::vector<Chromosome>& population,
                                        const std::vector<double>& fitnesses,
                                        const GaConfig& cfg, Rng& rng) {
  if (population.size() != fitnesses.size() || population.size() != cfg.population_size) {
    throw Error(ErrorCode::SizeMismatch, "population, fitnesses and population_size disagree");
  }
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (fitnesses[a] != fitnesses[b]) return fitnesses[a] > fitnesses[b];
    if (population[a].value() != population[b].value()) {
      return population[a].value() < population[b].value();
    }
    return a < b;
  });

  std::vector<std::size_t> out(order.begin(), order.begin() + cfg.elite_count);
  out.reserve(cfg.population_size);

  std::vector<double> cumulative(fitnesses.size());
  std::partial_sum(fitnesses.begin(), fitnesses.end(), cumulative.begin());
  const double total = cumulative.back();
  std::uniform_int_distribution<std::size_t> uniform(0, population.size() - 1);
  while (out.size() < cfg.population_size) {
    if (total <= 0) {
      out.push_back(uniform(rng));
      continue;
    }
    const double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    out.push_back(std::min<std::size_t>(it - cumulative.begin(), population.size() - 1));
  }
  return out;
}

RunReport run_ga(const Objective& objective, const GaConfig& cfg) {
  cfg.validate();
  objective.layout.validate();
  Rng rng(cfg.rng_seed);

  std::vector<Chromosome> population;
  std::vector<Evaluation> evals;
  population.reserve(cfg.population_size);
  evals.reserve(cfg.population_size);
  for (std::size_t i = 0; i < cfg.population_size; ++i) {
    population.push_back(random_chromosome(objective.layout, rng));
    evals.push_back(objective.evaluate(population.back()));
  }

  RunReport report = start_report(objective, population[0], evals[0]);
  report.evaluations = population.size();

  auto record = [&]() {
    std::size_t best = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < population.size(); ++i) {
      offer(report, objective, population[i], evals[i]);
      if (better(evals[i], population[i], evals[best], population[best])) best = i;
      sum += evals[i].fitness;
    }
    report.trace.push_back(TracePoint{evals[best].fitness,
                                      sum / static_cast<double>(population.size()),
                                      evals[best].energy_kwh});
  };
  record();

  std::vector<double> fitnesses(cfg.population_size);
  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    for (std::size_t i = 0; i < evals.size(); ++i) fitnesses[i] = evals[i].fitness;
    const auto picks = select_elitist(population, fitnesses, cfg, rng);

    std::vector<Chromosome> next;
    std::vector<Evaluation> next_evals;
    next.reserve(cfg.population_size);
    next_evals.reserve(cfg.population_size);
    for (std::size_t i = 0; i < cfg.elite_count; ++i) {
      next.push_back(population[picks[i]]);
      next_evals.push_back(evals[picks[i]]);
    }

    auto add_child = [&](Chromosome child) {
      if (coin(rng, cfg.mutation_prob)) child = mutate(child, rng);
      next_evals.push_back(objective.evaluate(child));
      next.push_back(child);
      ++report.evaluations;
    };
    for (std::size_t i = cfg.elite_count; i < picks.size(); i += 2) {
      const Chromosome& a = population[picks[i]];
      if (i + 1 == picks.size()) {
        add_child(a);
        break;
      }
      const Chromosome& b = population[picks[i + 1]];
      if (coin(rng, cfg.crossover_prob)) {
        auto [c1, c2] = crossover(a, b, rng);
        add_child(c1);
        add_child(c2);
      } else {
        add_child(a);
        add_child(b);
      }
    }

    population = std::move(next);
    evals = std::move(next_evals);
    record();
  }
  return report;
}

RunReport run_shc(const Objective& objective, const ShcConfig& cfg) {
  objective.layout.validate();
  Rng rng(cfg.rng_seed);

  Chromosome incumbent = random_chromosome(objective.layout, rng);
  Evaluation current = objective.evaluate(incumbent);
  RunReport report;
  report.evaluations = 1;
  report.trace.push_back({current.fitness, current.fitness, current.energy_kwh});

  for (std::size_t i = 0; i < cfg.max_iterations; ++i) {
    const Chromosome candidate = cfg.neighborhood == ShcNeighborhood::BitFlip
                                     ? mutate(incumbent, rng)
                                     : random_chromosome(objective.layout, rng);
    const Evaluation e = objective.evaluate(candidate);
    ++report.evaluations;
    if (e.fitness >= current.fitness) {
      incumbent = candidate;
      current = e;
    }
    report.trace.push_back({current.fitness, current.fitness, current.energy_kwh});
  }

  report.best_chromosome = incumbent;
  report.best = current;
  if (objective.layout.kind != LayoutKind::Generic) {
    report.best_params = decode(incumbent, objective.layout);
  }
  return report;
}

RunReport run_exhaustive(const Objective& objective, std::size_t max_bits) {
  objective.layout.validate();
  const auto space = enumerate_all(objective.layout, max_bits);
  auto it = space.begin();
  RunReport report = start_report(objective, *it, objective.evaluate(*it));
  report.evaluations = 1;
  double sum = report.best.fitness;
  for (++it; it != space.end(); ++it) {
    const Chromosome c = *it;
    const Evaluation e = objective.evaluate(c);
    sum += e.fitness;
    ++report.evaluations;
    offer(report, objective, c, e);
  }
  report.trace.push_back({report.best.fitness, sum / static_cast<double>(space.size()),
                          report.best.energy_kwh});
  return report;
}

void write_trace_csv(std::ostream& out, const RunReport& report) {
  out << "generation,best_fitness,mean_fitness,best_energy_kwh\n";
  for (std::size_t g = 0; g < report.trace.size(); ++g) {
    const auto& t = report.trace[g];
    out << g << ',' << detail::format_number(t.best_fitness) << ','
        << detail::format_number(t.mean_fitness) << ','
        << detail::format_number(t.best_energy_kwh) << '\n';
  }
}

void write_trace_csv(const std::filesystem::path& path, const RunReport& report) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  write_trace_csv(out, report);
}

}  // namespace ecodrive
