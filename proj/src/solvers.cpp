#include "ucap/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "internal.hpp"

namespace ucap {
namespace {

using detail::SolveClock;

constexpr std::uint64_t kTagLra = 0x10ca1ULL;
constexpr std::uint64_t kTagMga = 0x9a9aULL;

void validate_config(const SolverConfig& config) {
  if (config.lra_total_iteration < 0 || config.mga_max_generation < 0)
    throw ValidationError("iteration budgets must be non-negative");
  if (config.switching_tolerance < 1 || config.mutation_tolerance < 1)
    throw ValidationError("tolerances must be positive");
  if (config.mini_batch_size < 2 || config.mini_batch_size % 2 != 0)
    throw ValidationError("mini_batch_size must be even and at least 2");
  if (config.wall_clock_seconds && *config.wall_clock_seconds < 0)
    throw ValidationError("wall clock budget must be non-negative");
}

struct PhaseRun {
  SolveClock::time_point t0;
  std::vector<TracePoint> trace;

  void emit(Phase phase, Score score, std::int64_t iteration) {
    trace.push_back(
        TracePoint{detail::seconds_since(t0), score, phase, iteration});
  }
};

SolveResult run_lra(const Instance& instance, Solution current,
                    const SolverConfig& config, PhaseRun run) {
  EvaluationReport report = detail::checked_start_report(instance, current, "lra");
  Score best = report.score();
  Rng rng(derive_seed(config.seed, kTagLra));

  const int n_elements = static_cast<int>(current.elements.size());
  run.emit(Phase::Lra, best, 0);

  std::int64_t iteration = 0;
  std::int64_t stale = 0;
  Termination term = Termination::IterationBudget;
  while (true) {
    if (stale >= config.switching_tolerance) {
      term = Termination::SwitchingTolerance;
      break;
    }
    if (iteration >= config.lra_total_iteration) {
      term = Termination::IterationBudget;
      break;
    }
    if (detail::past_budget(run.t0, config.wall_clock_seconds)) {
      term = Termination::WallClock;
      break;
    }
    ++iteration;

    const int element = rng.below_int(n_elements);
    Assignment& slot = current.elements[element];
    const std::int32_t original = slot.faculty;
    std::int32_t chosen = original;
    EvaluationReport chosen_report;
    bool improved = false;

    // Try every eligible replacement in instance order; keep the best
    // strictly improving hard-feasible one.
    for (const std::int32_t f : instance.eligible_faculty(slot.section)) {
      if (f == original) continue;
      slot.faculty = f;
      const std::int32_t changed[] = {original, f};
      EvaluationReport candidate =
          evaluate_delta(instance, current, report, changed);
      slot.faculty = original;
      if (candidate.feasible() && candidate.score() > best) {
        best = candidate.score();
        chosen = f;
        chosen_report = std::move(candidate);
        improved = true;
        run.emit(Phase::Lra, best, iteration);
      }
    }

    if (improved) {
      slot.faculty = chosen;
      report = std::move(chosen_report);
      stale = 0;
    } else {
      ++stale;
    }
  }

  run.emit(Phase::Lra, best, iteration);
  return SolveResult{std::move(current), std::move(report),
                     std::move(run.trace), term};
}

SolveResult run_mga(const Instance& instance, Solution current,
                    const SolverConfig& config, PhaseRun run) {
  EvaluationReport report = detail::checked_start_report(instance, current, "mga");
  Score best = report.score();
  Rng rng(derive_seed(config.seed, kTagMga));

  const int n_elements = static_cast<int>(current.elements.size());
  int batch_size = std::min<int>(config.mini_batch_size, n_elements);
  batch_size -= batch_size % 2;

  run.emit(Phase::MgaCrossover, best, 0);

  std::vector<int> pool(n_elements);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::pair<int, std::int32_t>> applied;  // element, old faculty
  std::vector<std::int32_t> changed;

  bool mutation_active = false;
  std::int64_t generation = 0;
  std::int64_t stale = 0;
  Termination term = Termination::IterationBudget;
  while (true) {
    if (generation >= config.mga_max_generation) {
      term = Termination::IterationBudget;
      break;
    }
    if (detail::past_budget(run.t0, config.wall_clock_seconds)) {
      term = Termination::WallClock;
      break;
    }
    ++generation;

    if (!mutation_active && stale >= config.mutation_tolerance) {
      mutation_active = true;  // latches; never resets
      run.emit(Phase::MgaMutation, best, generation);
    }
    const Phase phase =
        mutation_active ? Phase::MgaMutation : Phase::MgaCrossover;

    // Mini-batch of distinct elements via partial Fisher-Yates.
    for (int i = 0; i < batch_size; ++i) {
      const int j = i + rng.below_int(n_elements - i);
      std::swap(pool[i], pool[j]);
    }

    applied.clear();
    changed.clear();

    // Pairwise faculty exchange, filtered to mutually eligible pairs.
    for (int i = 0; i + 1 < batch_size; i += 2) {
      Assignment& a = current.elements[pool[i]];
      Assignment& b = current.elements[pool[i + 1]];
      if (a.faculty == b.faculty) continue;
      if (!instance.prefers(b.faculty, a.section) ||
          !instance.prefers(a.faculty, b.section))
        continue;
      applied.emplace_back(pool[i], a.faculty);
      applied.emplace_back(pool[i + 1], b.faculty);
      changed.push_back(a.faculty);
      changed.push_back(b.faculty);
      std::swap(a.faculty, b.faculty);
    }

    if (mutation_active && batch_size > 0) {
      const int target = pool[rng.below_int(batch_size)];
      Assignment& slot = current.elements[target];
      const auto eligible = instance.eligible_faculty(slot.section);
      const std::int32_t replacement =
          eligible[rng.below(static_cast<std::int64_t>(eligible.size()))];
      if (replacement != slot.faculty) {
        applied.emplace_back(target, slot.faculty);
        changed.push_back(slot.faculty);
        changed.push_back(replacement);
        slot.faculty = replacement;
      }
    }

    if (applied.empty()) {
      ++stale;
      continue;
    }

    EvaluationReport candidate =
        evaluate_delta(instance, current, report, changed);
    if (candidate.feasible() && candidate.score() > best) {
      best = candidate.score();
      report = std::move(candidate);
      stale = 0;
      run.emit(phase, best, generation);
    } else {
      for (auto it = applied.rbegin(); it != applied.rend(); ++it)
        current.elements[it->first].faculty = it->second;
      ++stale;
    }
  }

  run.emit(mutation_active ? Phase::MgaMutation : Phase::MgaCrossover, best,
           generation);
  return SolveResult{std::move(current), std::move(report),
                     std::move(run.trace), term};
}

}  // namespace

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::Lra: return "LRA";
    case Phase::MgaCrossover: return "MGA-crossover";
    case Phase::MgaMutation: return "MGA-mutation";
    case Phase::Shc: return "SHC";
    case Phase::Sa: return "SA";
    case Phase::Ts: return "TS";
    case Phase::Ga: return "GA";
    case Phase::Memetic: return "Memetic";
  }
  return "?";
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::IterationBudget: return "iteration-budget";
    case Termination::WallClock: return "wall-clock";
    case Termination::SwitchingTolerance: return "switching-tolerance";
  }
  return "?";
}

SolveResult lra(const Instance& instance, const Solution& start,
                const SolverConfig& config) {
  validate_config(config);
  return run_lra(instance, start, config,
                 PhaseRun{SolveClock::now(), {}});
}

SolveResult mga(const Instance& instance, const Solution& start,
                const SolverConfig& config) {
  validate_config(config);
  return run_mga(instance, start, config,
                 PhaseRun{SolveClock::now(), {}});
}

SolveResult hybrid(const Instance& instance, const Solution& start,
                   const SolverConfig& config) {
  validate_config(config);
  const auto t0 = SolveClock::now();
  SolveResult result =
      run_lra(instance, start, config, PhaseRun{t0, {}});
  // Hand over once local repair stalls (or spends its budget), provided
  // there is anything left to spend.
  if (result.terminated_by != Termination::WallClock &&
      config.mga_max_generation > 0 &&
      !detail::past_budget(t0, config.wall_clock_seconds)) {
    result = run_mga(instance, std::move(result.best_solution), config,
                     PhaseRun{t0, std::move(result.trace)});
  }
  return result;
}

}  // namespace ucap
