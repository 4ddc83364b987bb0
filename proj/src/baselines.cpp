#include "ucap/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "internal.hpp"

namespace ucap {
namespace {

using detail::SolveClock;

constexpr std::uint64_t kTagShc = 0x5bcULL;
constexpr std::uint64_t kTagSa = 0x5aULL;
constexpr std::uint64_t kTagTs = 0x7ab5ULL;
constexpr std::uint64_t kTagGa = 0x6aULL;
constexpr std::uint64_t kTagMemetic = 0x3e3eULL;

// Below this temperature the acceptance probability for a non-improving
// move is treated as zero and no acceptance draw is consumed, so SA with
// initial_temperature 0 consumes the exact draw sequence of SHC.
constexpr double kMinTemperature = 1e-12;

void validate_config(const BaselineConfig& config) {
  if (config.population_size < 2)
    throw ValidationError("population_size must be at least 2");
  if (config.crossover_rate < 0 || config.crossover_rate > 1 ||
      config.mutation_rate < 0 || config.mutation_rate > 1)
    throw ValidationError("rates must be in [0, 1]");
  if (config.initial_temperature < 0)
    throw ValidationError("initial_temperature must be non-negative");
  if (config.cooling_rate <= 0 || config.cooling_rate > 1)
    throw ValidationError("cooling_rate must be in (0, 1]");
  if (config.tabu_tenure < 1) throw ValidationError("tabu_tenure must be positive");
  if (config.memetic_refine_iters < 0)
    throw ValidationError("memetic_refine_iters must be non-negative");
  if (config.max_iterations < 0)
    throw ValidationError("max_iterations must be non-negative");
  if (config.wall_clock_seconds && *config.wall_clock_seconds < 0)
    throw ValidationError("wall clock budget must be non-negative");
}

struct Tracer {
  SolveClock::time_point t0;
  Phase phase;
  std::vector<TracePoint> trace;

  void emit(Score score, std::int64_t iteration) {
    trace.push_back(
        TracePoint{detail::seconds_since(t0), score, phase, iteration});
  }
};

// Shared neighborhood move: one element, one random eligible faculty.
struct NeighborDraw {
  int element;
  std::int32_t faculty;
};

NeighborDraw draw_neighbor(const Instance& instance, const Solution& solution,
                           Rng& rng) {
  const int element = rng.below_int(static_cast<int>(solution.elements.size()));
  const auto eligible =
      instance.eligible_faculty(solution.elements[element].section);
  return NeighborDraw{
      element,
      eligible[rng.below(static_cast<std::int64_t>(eligible.size()))]};
}

SolveResult run_shc(const Instance& instance, Solution current,
                    const BaselineConfig& config, SolveClock::time_point t0) {
  EvaluationReport report = detail::checked_start_report(instance, current, "shc");
  Score best = report.score();
  Rng rng(derive_seed(config.seed, kTagShc));
  Tracer tracer{t0, Phase::Shc, {}};
  tracer.emit(best, 0);

  std::int64_t iteration = 0;
  Termination term = Termination::IterationBudget;
  while (iteration < config.max_iterations) {
    if (detail::past_budget(t0, config.wall_clock_seconds)) {
      term = Termination::WallClock;
      break;
    }
    ++iteration;
    const NeighborDraw move = draw_neighbor(instance, current, rng);
    Assignment& slot = current.elements[move.element];
    if (move.faculty == slot.faculty) continue;
    const std::int32_t original = slot.faculty;
    slot.faculty = move.faculty;
    const std::int32_t changed[] = {original, move.faculty};
    EvaluationReport candidate =
        evaluate_delta(instance, current, report, changed);
    if (candidate.feasible() && candidate.score() > best) {
      best = candidate.score();
      report = std::move(candidate);
      tracer.emit(best, iteration);
    } else {
      slot.faculty = original;
    }
  }
  tracer.emit(best, iteration);
  return SolveResult{std::move(current), std::move(report),
                     std::move(tracer.trace), term};
}

SolveResult run_sa(const Instance& instance, Solution current,
                   const BaselineConfig& config, SolveClock::time_point t0) {
  EvaluationReport current_report =
      detail::checked_start_report(instance, current, "sa");
  Score current_score = current_report.score();

  Solution best_solution = current;
  EvaluationReport best_report = current_report;
  Score best = current_score;

  // Same stream tag as SHC: with initial_temperature 0 the two runs are
  // draw-for-draw identical.
  Rng rng(derive_seed(config.seed, kTagShc));
  Tracer tracer{t0, Phase::Sa, {}};
  tracer.emit(best, 0);

  double temperature = config.initial_temperature;
  std::int64_t iteration = 0;
  Termination term = Termination::IterationBudget;
  while (iteration < config.max_iterations) {
    if (detail::past_budget(t0, config.wall_clock_seconds)) {
      term = Termination::WallClock;
      break;
    }
    ++iteration;
    const NeighborDraw move = draw_neighbor(instance, current, rng);
    Assignment& slot = current.elements[move.element];
    if (move.faculty != slot.faculty) {
      const std::int32_t original = slot.faculty;
      slot.faculty = move.faculty;
      const std::int32_t changed[] = {original, move.faculty};
      EvaluationReport candidate =
          evaluate_delta(instance, current, current_report, changed);
      bool accept = false;
      if (candidate.feasible()) {
        const Score candidate_score = candidate.score();
        if (candidate_score > current_score) {
          accept = true;
        } else if (temperature > kMinTemperature) {
          const double delta = candidate_score.value() - current_score.value();
          accept = rng.unit() < std::exp(delta / temperature);
        }
        if (accept) {
          current_report = std::move(candidate);
          current_score = candidate_score;
          if (current_score > best) {
            best = current_score;
            best_solution = current;
            best_report = current_report;
            tracer.emit(best, iteration);
          }
        }
      }
      if (!accept) slot.faculty = original;
    }
    temperature *= config.cooling_rate;
  }
  tracer.emit(best, iteration);
  return SolveResult{std::move(best_solution), std::move(best_report),
                     std::move(tracer.trace), term};
}

SolveResult run_tabu(const Instance& instance, Solution current,
                     const BaselineConfig& config, SolveClock::time_point t0) {
  EvaluationReport current_report =
      detail::checked_start_report(instance, current, "ts");
  Score current_score = current_report.score();

  Solution best_solution = current;
  EvaluationReport best_report = current_report;
  Score best = current_score;

  Tracer tracer{t0, Phase::Ts, {}};
  tracer.emit(best, 0);

  const int n_elements = static_cast<int>(current.elements.size());
  // tabu_until[e][f]: setting element e back to faculty f is forbidden
  // until that iteration (best-solution aspiration overrides).
  std::vector<std::vector<std::int64_t>> tabu_until(
      n_elements, std::vector<std::int64_t>(instance.n_faculty(), 0));

  std::int64_t iteration = 0;
  Termination term = Termination::IterationBudget;
  while (iteration < config.max_iterations) {
    if (detail::past_budget(t0, config.wall_clock_seconds)) {
      term = Termination::WallClock;
      break;
    }
    ++iteration;

    int move_element = -1;
    std::int32_t move_faculty = -1;
    Score move_score;
    EvaluationReport move_report;
    bool found = false;

    // Full scan of the single-element replacement neighborhood.
    for (int e = 0; e < n_elements; ++e) {
      Assignment& slot = current.elements[e];
      const std::int32_t original = slot.faculty;
      for (const std::int32_t f : instance.eligible_faculty(slot.section)) {
        if (f == original) continue;
        slot.faculty = f;
        const std::int32_t changed[] = {original, f};
        EvaluationReport candidate =
            evaluate_delta(instance, current, current_report, changed);
        slot.faculty = original;
        if (!candidate.feasible()) continue;
        const Score score = candidate.score();
        const bool is_tabu = tabu_until[e][f] >= iteration;
        if (is_tabu && !(score > best)) continue;  // aspiration
        if (!found || score > move_score) {
          found = true;
          move_element = e;
          move_faculty = f;
          move_score = score;
          move_report = std::move(candidate);
        }
      }
    }

    if (!found) continue;  // everything tabu and non-aspirating; let it age

    Assignment& slot = current.elements[move_element];
    tabu_until[move_element][slot.faculty] = iteration + config.tabu_tenure;
    slot.faculty = move_faculty;
    current_report = std::move(move_report);
    current_score = move_score;
    if (current_score > best) {
      best = current_score;
      best_solution = current;
      best_report = current_report;
      tracer.emit(best, iteration);
    }
  }
  tracer.emit(best, iteration);
  return SolveResult{std::move(best_solution), std::move(best_report),
                     std::move(tracer.trace), term};
}

struct Individual {
  Solution solution;
  EvaluationReport report;
  Score score;
};

// Rebuilds feasibility element by element, keeping inherited faculty where
// possible and redrawing from the eligible list otherwise. Returns false
// when some element cannot be seated (offspring is then discarded).
bool repair(const Instance& instance, const std::vector<std::uint64_t>& masks,
            Solution& solution, Rng& rng) {
  std::vector<std::uint64_t> occupied(instance.n_faculty(), 0);
  std::vector<Fixed> load(instance.n_faculty());
  std::vector<std::vector<std::int32_t>> seats(instance.n_sections());

  for (Assignment& a : solution.elements) {
    const CourseSection& sec = instance.section(a.section);
    const auto fits = [&](std::int32_t f) {
      if (!instance.prefers(f, a.section)) return false;
      if ((occupied[f] & masks[a.section]) != 0) return false;
      if (load[f] + sec.credits > instance.faculty_member(f).max_credits)
        return false;
      return std::find(seats[a.section].begin(), seats[a.section].end(), f) ==
             seats[a.section].end();
    };
    if (!fits(a.faculty)) {
      const auto eligible = instance.eligible_faculty(a.section);
      const int n = static_cast<int>(eligible.size());
      const int offset = rng.below_int(n);
      std::int32_t found = -1;
      for (int k = 0; k < n; ++k) {
        const std::int32_t f = eligible[(offset + k) % n];
        if (fits(f)) {
          found = f;
          break;
        }
      }
      if (found < 0) return false;
      a.faculty = found;
    }
    occupied[a.faculty] |= masks[a.section];
    load[a.faculty] += sec.credits;
    seats[a.section].push_back(a.faculty);
  }
  return true;
}

// A short stochastic hill climb used for memetic offspring refinement.
void refine(const Instance& instance, Individual& ind, int iters, Rng& rng) {
  for (int i = 0; i < iters; ++i) {
    const NeighborDraw move = draw_neighbor(instance, ind.solution, rng);
    Assignment& slot = ind.solution.elements[move.element];
    if (move.faculty == slot.faculty) continue;
    const std::int32_t original = slot.faculty;
    slot.faculty = move.faculty;
    const std::int32_t changed[] = {original, move.faculty};
    EvaluationReport candidate =
        evaluate_delta(instance, ind.solution, ind.report, changed);
    if (candidate.feasible() && candidate.score() > ind.score) {
      ind.score = candidate.score();
      ind.report = std::move(candidate);
    } else {
      slot.faculty = original;
    }
  }
}

SolveResult run_ga(const Instance& instance, const Solution& start,
                   const BaselineConfig& config, SolveClock::time_point t0,
                   bool memetic) {
  EvaluationReport start_report =
      detail::checked_start_report(instance, start, memetic ? "memetic" : "ga");
  Rng rng(derive_seed(config.seed, memetic ? kTagMemetic : kTagGa));
  Tracer tracer{t0, memetic ? Phase::Memetic : Phase::Ga, {}};

  const std::vector<std::uint64_t> masks = detail::section_masks(instance);
  const int n_elements = static_cast<int>(start.elements.size());

  Score best = start_report.score();
  tracer.emit(best, 0);

  // Population seeded from the shared start plus feasible random walks.
  std::vector<Individual> population;
  population.reserve(config.population_size);
  population.push_back(Individual{start, start_report, best});
  while (static_cast<int>(population.size()) < config.population_size) {
    Individual ind = population.front();
    for (int step = 0; step < n_elements; ++step) {
      const NeighborDraw move = draw_neighbor(instance, ind.solution, rng);
      Assignment& slot = ind.solution.elements[move.element];
      if (move.faculty == slot.faculty) continue;
      const std::int32_t original = slot.faculty;
      slot.faculty = move.faculty;
      const std::int32_t changed[] = {original, move.faculty};
      EvaluationReport candidate =
          evaluate_delta(instance, ind.solution, ind.report, changed);
      if (candidate.feasible()) {
        ind.report = std::move(candidate);
        ind.score = ind.report.score();
      } else {
        slot.faculty = original;
      }
    }
    population.push_back(std::move(ind));
  }

  std::size_t best_index = 0;
  for (std::size_t i = 0; i < population.size(); ++i)
    if (population[i].score > population[best_index].score) best_index = i;
  if (population[best_index].score > best) {
    best = population[best_index].score;
    tracer.emit(best, 0);
  }

  const auto tournament = [&]() -> const Individual& {
    const Individual* winner = nullptr;
    for (int k = 0; k < 3; ++k) {
      const Individual& contender =
          population[rng.below(static_cast<std::int64_t>(population.size()))];
      if (!winner || contender.score > winner->score) winner = &contender;
    }
    return *winner;
  };

  std::int64_t generation = 0;
  Termination term = Termination::IterationBudget;
  while (generation < config.max_iterations) {
    if (detail::past_budget(t0, config.wall_clock_seconds)) {
      term = Termination::WallClock;
      break;
    }
    ++generation;

    std::vector<Individual> next;
    next.reserve(config.population_size);
    next.push_back(population[best_index]);  // elite carries over

    while (static_cast<int>(next.size()) < config.population_size) {
      Individual child;
      bool built = false;
      for (int attempt = 0; attempt < 20 && !built; ++attempt) {
        const Individual& p1 = tournament();
        if (rng.chance(config.crossover_rate) && n_elements >= 2) {
          const Individual& p2 = tournament();
          child.solution = p1.solution;
          const int cut = 1 + rng.below_int(n_elements - 1);
          for (int e = cut; e < n_elements; ++e)
            child.solution.elements[e] = p2.solution.elements[e];
          if (!repair(instance, masks, child.solution, rng)) continue;
        } else {
          child.solution = p1.solution;
        }
        built = true;
      }
      if (!built) child.solution = tournament().solution;  // give up, clone

      child.report = evaluate(instance, child.solution);
      child.score = child.report.score();

      // Per-element mutation, kept only when it stays hard-feasible.
      for (int e = 0; e < n_elements; ++e) {
        if (!rng.chance(config.mutation_rate)) continue;
        Assignment& slot = child.solution.elements[e];
        const auto eligible = instance.eligible_faculty(slot.section);
        const std::int32_t f =
            eligible[rng.below(static_cast<std::int64_t>(eligible.size()))];
        if (f == slot.faculty) continue;
        const std::int32_t original = slot.faculty;
        slot.faculty = f;
        const std::int32_t changed[] = {original, f};
        EvaluationReport candidate =
            evaluate_delta(instance, child.solution, child.report, changed);
        if (candidate.feasible()) {
          child.report = std::move(candidate);
          child.score = child.report.score();
        } else {
          slot.faculty = original;
        }
      }

      if (memetic) refine(instance, child, config.memetic_refine_iters, rng);
      next.push_back(std::move(child));
    }

    population = std::move(next);
    best_index = 0;
    for (std::size_t i = 0; i < population.size(); ++i)
      if (population[i].score > population[best_index].score) best_index = i;
    if (population[best_index].score > best) {
      best = population[best_index].score;
      tracer.emit(best, generation);
    }
  }

  tracer.emit(best, generation);
  Individual& champion = population[best_index];
  return SolveResult{std::move(champion.solution), std::move(champion.report),
                     std::move(tracer.trace), term};
}

}  // namespace

const char* baseline_name(BaselineAlgorithm a) {
  switch (a) {
    case BaselineAlgorithm::Ga: return "ga";
    case BaselineAlgorithm::Memetic: return "memetic";
    case BaselineAlgorithm::StochasticHillClimbing: return "shc";
    case BaselineAlgorithm::SimulatedAnnealing: return "sa";
    case BaselineAlgorithm::TabuSearch: return "ts";
  }
  return "?";
}

SolveResult run_baseline(const Instance& instance, const Solution& start,
                         const BaselineConfig& config) {
  validate_config(config);
  const auto t0 = SolveClock::now();
  switch (config.algorithm) {
    case BaselineAlgorithm::StochasticHillClimbing:
      return run_shc(instance, start, config, t0);
    case BaselineAlgorithm::SimulatedAnnealing:
      return run_sa(instance, start, config, t0);
    case BaselineAlgorithm::TabuSearch:
      return run_tabu(instance, start, config, t0);
    case BaselineAlgorithm::Ga:
      return run_ga(instance, start, config, t0, false);
    case BaselineAlgorithm::Memetic:
      return run_ga(instance, start, config, t0, true);
  }
  throw ValidationError("unknown baseline algorithm");
}

}  // namespace ucap
