#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucap/evaluation.hpp"
#include "ucap/model.hpp"
#include "ucap/rng.hpp"

namespace ucap {

// Table of solver parameters. The iteration defaults are the reference
// settings: LRA 5000/1000, MGA 500000 generations, mini-batch 2, mutation
// tolerance 20000.
struct SolverConfig {
  std::int64_t lra_total_iteration = 5000;
  std::int64_t switching_tolerance = 1000;
  std::int64_t mga_max_generation = 500000;
  int mini_batch_size = 2;  // even, >= 2
  std::int64_t mutation_tolerance = 20000;
  // Unset means unlimited (iteration budgets bind instead).
  std::optional<double> wall_clock_seconds;
  RngSeed seed;
};

enum class Phase : std::uint8_t {
  Lra,
  MgaCrossover,
  MgaMutation,
  Shc,
  Sa,
  Ts,
  Ga,
  Memetic,
};

const char* phase_name(Phase phase);

// One best-score sample. Solvers emit a point at phase start, on every
// strict improvement, on mutation activation, and at phase end, so score-vs-
// time plots and plateau checks need nothing but the trace.
struct TracePoint {
  double elapsed_seconds = 0.0;
  Score best_score;
  Phase phase = Phase::Lra;
  std::int64_t iteration = 0;  // within-phase iteration / generation
};

enum class Termination : std::uint8_t {
  IterationBudget,
  WallClock,
  SwitchingTolerance,
};

const char* termination_name(Termination t);

struct SolveResult {
  Solution best_solution;
  EvaluationReport best_report;  // always equals evaluate(best_solution)
  std::vector<TracePoint> trace;
  Termination terminated_by = Termination::IterationBudget;
};

// Local Repair: repeatedly pick a random element and commit the best
// eligible faculty replacement for it, elitist on the exact score. Stops on
// the iteration budget, on switching_tolerance consecutive non-improving
// iterations, or on the wall clock. Throws InfeasibleError unless `start` is
// hard-feasible.
SolveResult lra(const Instance& instance, const Solution& start,
                const SolverConfig& config);

// Modified GA over a single incumbent: each generation swaps faculty between
// mini-batch element pairs (eligibility-filtered), optionally mutates one
// batch element once mutation has activated, and accepts only strict
// hard-feasible improvements. Mutation activates after mutation_tolerance
// consecutive non-improving generations and stays active.
SolveResult mga(const Instance& instance, const Solution& start,
                const SolverConfig& config);

// LRA, then MGA from the LRA best once it stalls. Trace is the concatenation
// with continuous elapsed time and per-phase tags; the final score never
// drops below the LRA phase's.
SolveResult hybrid(const Instance& instance, const Solution& start,
                   const SolverConfig& config);

}  // namespace ucap
