#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ucap/baselines.hpp"
#include "ucap/seeding.hpp"

using namespace ucap;
using namespace ucap_test;

namespace {

Instance small_instance() {
  return Instance::create(
      {theory("S1", "X", {1}), theory("S2", "Y", {1, 8}),
       theory("S3", "Z", {8, 20}), lab("L1", "W", {26})},
      {fac("A", {"X", "Y", "W"}, 7.5), fac("B", {"X", "Z", "W"}, 7.5),
       fac("C", {"Y", "Z", "W"}, 7.5), fac("D", {"X", "Y", "Z", "W"}, 7.5)});
}

Instance frozen_instance() {
  return Instance::create(
      {theory("S1", "X", {0}), theory("S2", "Y", {7}), lab("L1", "Z", {14})},
      {fac("A", {"X"}), fac("B", {"Y", "Z"}), fac("C", {"Z"})});
}

bool trace_monotone(const std::vector<TracePoint>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].best_score < trace[i - 1].best_score) return false;
    if (trace[i].elapsed_seconds < trace[i - 1].elapsed_seconds) return false;
  }
  return true;
}

bool same_result(const SolveResult& a, const SolveResult& b) {
  if (!(a.best_solution == b.best_solution)) return false;
  if (a.trace.size() != b.trace.size()) return false;
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    if (a.trace[i].best_score != b.trace[i].best_score ||
        a.trace[i].iteration != b.trace[i].iteration)
      return false;
  return true;
}

constexpr BaselineAlgorithm kAll[] = {
    BaselineAlgorithm::Ga, BaselineAlgorithm::Memetic,
    BaselineAlgorithm::StochasticHillClimbing,
    BaselineAlgorithm::SimulatedAnnealing, BaselineAlgorithm::TabuSearch};

}  // namespace

TEST_CASE("baseline config validation") {
  const Instance inst = frozen_instance();
  const Solution start = initial_solution(inst, RngSeed{1});
  BaselineConfig bad;
  bad.crossover_rate = 1.5;
  CHECK_THROWS_AS(run_baseline(inst, start, bad), ValidationError);
  bad = BaselineConfig{};
  bad.cooling_rate = 0.0;
  CHECK_THROWS_AS(run_baseline(inst, start, bad), ValidationError);
  bad = BaselineConfig{};
  bad.population_size = 1;
  CHECK_THROWS_AS(run_baseline(inst, start, bad), ValidationError);
}

TEST_CASE("shc with an empty improving neighborhood returns the start") {
  const Instance inst = frozen_instance();
  const Solution start = initial_solution(inst, RngSeed{1});
  BaselineConfig config;
  config.algorithm = BaselineAlgorithm::StochasticHillClimbing;
  config.max_iterations = 2000;
  config.seed = RngSeed{5};
  const SolveResult result = run_baseline(inst, start, config);
  CHECK(result.best_solution == start);
  CHECK(result.terminated_by == Termination::IterationBudget);
}

TEST_CASE("sa with zero initial temperature behaves exactly like shc") {
  const Instance inst = small_instance();
  const Solution start = initial_solution(inst, RngSeed{2});
  BaselineConfig config;
  config.max_iterations = 4000;
  config.seed = RngSeed{71};

  config.algorithm = BaselineAlgorithm::StochasticHillClimbing;
  const SolveResult shc = run_baseline(inst, start, config);

  config.algorithm = BaselineAlgorithm::SimulatedAnnealing;
  config.initial_temperature = 0.0;
  const SolveResult sa = run_baseline(inst, start, config);

  CHECK(same_result(shc, sa));
}

TEST_CASE("all baselines stay feasible, monotone, deterministic, bounded") {
  const Instance inst = small_instance();
  const Solution start = initial_solution(inst, RngSeed{3});
  const EnumerationResult oracle = enumerate_all(inst);
  REQUIRE(oracle.feasible > 0);

  for (const BaselineAlgorithm algo : kAll) {
    CAPTURE(baseline_name(algo));
    BaselineConfig config;
    config.algorithm = algo;
    config.seed = RngSeed{100};
    config.max_iterations =
        (algo == BaselineAlgorithm::Ga || algo == BaselineAlgorithm::Memetic)
            ? 40
            : 4000;
    const SolveResult result = run_baseline(inst, start, config);

    CHECK(result.best_report.feasible());
    CHECK(result.best_report == evaluate(inst, result.best_solution));
    CHECK(trace_monotone(result.trace));
    CHECK(result.best_report.score() >= evaluate(inst, start).score());
    CHECK(result.best_report.score() <= oracle.best_score);
    CHECK_NOTHROW(check_structure(inst, result.best_solution));

    const SolveResult again = run_baseline(inst, start, config);
    CHECK(same_result(result, again));
  }
}

TEST_CASE("sa and ts reach the enumerated optimum on the small instance") {
  const Instance inst = small_instance();
  const EnumerationResult oracle = enumerate_all(inst);

  int sa_hits = 0;
  int ts_hits = 0;
  const int n_seeds = 20;
  for (int s = 1; s <= n_seeds; ++s) {
    const Solution start = initial_solution(inst, RngSeed{(std::uint64_t)s});
    BaselineConfig config;
    config.seed = RngSeed{(std::uint64_t)s};
    config.max_iterations = 4000;

    config.algorithm = BaselineAlgorithm::SimulatedAnnealing;
    if (run_baseline(inst, start, config).best_report.score() ==
        oracle.best_score)
      ++sa_hits;
    config.algorithm = BaselineAlgorithm::TabuSearch;
    if (run_baseline(inst, start, config).best_report.score() ==
        oracle.best_score)
      ++ts_hits;
  }
  // Both should find the optimum on at least 80% of seeds.
  CHECK(sa_hits >= 16);
  CHECK(ts_hits >= 16);
}

TEST_CASE("baselines refuse an infeasible start") {
  const Instance inst = Instance::create(
      {theory("S1", "X", {0}), theory("S2", "Y", {1})},
      {fac("A", {"X"}), fac("B", {"X", "Y"})});
  const Solution infeasible = solution_of(inst, {{1}, {0}});
  BaselineConfig config;
  for (const BaselineAlgorithm algo : kAll) {
    config.algorithm = algo;
    CHECK_THROWS_AS(run_baseline(inst, infeasible, config), InfeasibleError);
  }
}
