#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ucap/solvers.hpp"

namespace ucap {

enum class BaselineAlgorithm : std::uint8_t {
  Ga,
  Memetic,
  StochasticHillClimbing,
  SimulatedAnnealing,
  TabuSearch,
};

const char* baseline_name(BaselineAlgorithm a);

// Textbook formulations sharing the solver interface, the evaluation
// function, and the single-element faculty-replacement neighborhood. The
// numeric defaults are calibration choices, not reference values.
struct BaselineConfig {
  BaselineAlgorithm algorithm = BaselineAlgorithm::StochasticHillClimbing;

  // GA / Memetic
  int population_size = 50;
  double crossover_rate = 0.9;
  double mutation_rate = 0.05;  // per-element
  int memetic_refine_iters = 30;

  // Simulated annealing (temperature in score units, geometric cooling)
  double initial_temperature = 0.05;
  double cooling_rate = 0.999;

  // Tabu search
  int tabu_tenure = 50;

  // Iterations for SHC/SA/TS, generations for GA/Memetic.
  std::int64_t max_iterations = 500000;
  std::optional<double> wall_clock_seconds;
  RngSeed seed;
};

// Runs the configured baseline from a hard-feasible start. All variants keep
// the reported best hard-feasible, emit monotone best-score traces, and are
// deterministic per (instance, start, config).
SolveResult run_baseline(const Instance& instance, const Solution& start,
                         const BaselineConfig& config);

}  // namespace ucap
