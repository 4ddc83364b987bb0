// Command line front end: solve / compare / generate / validate.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <filesystem>
#include <iostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ucap/baselines.hpp"
#include "ucap/io.hpp"
#include "ucap/seeding.hpp"
#include "ucap/solvers.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const std::vector<std::string> kAlgorithms = {"lra", "mga", "hybrid", "shc",
                                              "sa", "ts", "ga", "memetic"};

ucap::BaselineAlgorithm baseline_kind(const std::string& algo) {
  if (algo == "ga") return ucap::BaselineAlgorithm::Ga;
  if (algo == "memetic") return ucap::BaselineAlgorithm::Memetic;
  if (algo == "sa") return ucap::BaselineAlgorithm::SimulatedAnnealing;
  if (algo == "ts") return ucap::BaselineAlgorithm::TabuSearch;
  return ucap::BaselineAlgorithm::StochasticHillClimbing;
}

struct Options {
  std::string instance_path;
  std::string algorithm = "hybrid";
  std::uint64_t seed = 1;
  std::string out_dir;

  ucap::SolverConfig solver;
  ucap::BaselineConfig baseline;
};

fs::path resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("UCAP_OUT_DIR")) return env;
  return ".";
}

ucap::SolveResult run_algorithm(const ucap::Instance& instance,
                                const ucap::Solution& start,
                                const std::string& algo, const Options& opt) {
  if (algo == "lra") return ucap::lra(instance, start, opt.solver);
  if (algo == "mga") return ucap::mga(instance, start, opt.solver);
  if (algo == "hybrid") return ucap::hybrid(instance, start, opt.solver);
  ucap::BaselineConfig config = opt.baseline;
  config.algorithm = baseline_kind(algo);
  return ucap::run_baseline(instance, start, config);
}

int cmd_solve(const Options& opt) {
  const ucap::Instance instance = ucap::load_instance(opt.instance_path);
  const fs::path out = resolve_out_dir(opt.out_dir);
  fs::create_directories(out);

  const ucap::RngSeed seed{opt.seed};
  const ucap::Solution start = ucap::initial_solution(instance, seed);

  const auto t0 = Clock::now();
  const ucap::SolveResult result =
      run_algorithm(instance, start, opt.algorithm, opt);
  const double wall = std::chrono::duration<double>(Clock::now() - t0).count();

  ucap::write_solution(out / "solution.txt", instance, result.best_solution);
  ucap::write_trace(out / "trace.csv", result.trace);
  ucap::write_summary(out / "summary.json", instance, opt.algorithm, seed,
                      result, wall);

  const ucap::Score score = result.best_report.score();
  std::cout << opt.algorithm << ": score " << score.value() << " ("
            << score.value() * 100.0 << "%), "
            << ucap::termination_name(result.terminated_by) << ", " << wall
            << "s\n"
            << "outputs in " << out.string() << "\n";
  return 0;
}

int cmd_compare(const Options& opt, const std::vector<std::string>& algos) {
  const ucap::Instance instance = ucap::load_instance(opt.instance_path);
  const fs::path out = resolve_out_dir(opt.out_dir);
  fs::create_directories(out);

  const ucap::RngSeed seed{opt.seed};
  const ucap::Solution start = ucap::initial_solution(instance, seed);

  struct Entry {
    std::string algo;
    ucap::SolveResult result;
    double wall = 0;
  };
  std::vector<Entry> entries(algos.size());

  // One run per thread; the instance is immutable and shared, outputs are
  // per-run. Under a common wall budget this also keeps the contest fair.
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < algos.size(); ++i) {
    entries[i].algo = algos[i];
    workers.emplace_back([&, i] {
      const auto t0 = Clock::now();
      entries[i].result = run_algorithm(instance, start, algos[i], opt);
      entries[i].wall =
          std::chrono::duration<double>(Clock::now() - t0).count();
    });
  }
  for (std::thread& w : workers) w.join();

  std::ofstream table(out / "comparison.csv");
  table << "algorithm,total_time_seconds,accuracy_percent\n";
  std::cout << "algorithm        time(s)   accuracy(%)\n";
  for (Entry& e : entries) {
    const double pct = e.result.best_report.score().value() * 100.0;
    char row[128];
    std::snprintf(row, sizeof row, "%s,%.3f,%.4f", e.algo.c_str(), e.wall, pct);
    table << row << "\n";
    std::snprintf(row, sizeof row, "%-16s %8.3f   %10.4f", e.algo.c_str(),
                  e.wall, pct);
    std::cout << row << "\n";
    ucap::write_trace(out / ("trace_" + e.algo + ".csv"), e.result.trace);
    ucap::write_solution(out / ("solution_" + e.algo + ".txt"), instance,
                         e.result.best_solution);
  }
  return 0;
}

int cmd_generate(const std::string& spec_path, std::uint64_t seed,
                 const std::string& out_path) {
  const ucap::GeneratorSpec spec = ucap::load_generator_spec(spec_path);
  const ucap::Instance instance =
      ucap::generate_instance(spec, ucap::RngSeed{seed});
  ucap::write_instance(out_path, instance);
  std::cout << "wrote " << out_path << " (" << instance.n_sections()
            << " sections, " << instance.n_faculty() << " faculty)\n";
  return 0;
}

int cmd_validate(const std::string& instance_path,
                 const std::string& solution_path) {
  const ucap::Instance instance = ucap::load_instance(instance_path);
  const ucap::Solution solution =
      ucap::load_solution(solution_path, instance);
  const ucap::EvaluationReport report = ucap::evaluate(instance, solution);

  const ucap::HardViolations& hv = report.hcv;
  std::cout << "hard violations: total " << hv.total() << "\n"
            << "  theory_unstaffed  " << hv.theory_unstaffed << "\n"
            << "  lab_understaffed  " << hv.lab_understaffed << "\n"
            << "  slot_clash        " << hv.slot_clash << "\n"
            << "  credit_exceeded   " << hv.credit_exceeded << "\n"
            << "  off_preference    " << hv.off_preference << "\n";
  std::cout << "per-faculty penalties (nonzero):\n";
  bool any = false;
  for (const ucap::FacultyReport& fr : report.per_faculty) {
    if (fr.penalty_sum.units == 0) continue;
    any = true;
    std::cout << "  " << instance.faculty_member(fr.faculty).id << " penalty "
              << fr.penalty_sum.str() << " score " << fr.clamped_score.str()
              << "\n";
  }
  if (!any) std::cout << "  (none)\n";
  const ucap::Score score = report.score();
  std::cout << "score: " << score.value() << " (" << score.value() * 100.0
            << "%)\n";
  return report.feasible() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"University course allocation solver"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::string> algos;
  std::string spec_path, out_path, solution_path;
  double budget = 0;
  bool budget_set = false;

  const auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--lra-iters", opt.solver.lra_total_iteration,
                    "LRA iteration budget");
    cmd->add_option("--switching-tolerance", opt.solver.switching_tolerance,
                    "consecutive non-improving LRA iterations before handoff");
    cmd->add_option("--mga-generations", opt.solver.mga_max_generation,
                    "MGA generation budget");
    cmd->add_option("--mini-batch", opt.solver.mini_batch_size,
                    "crossover mini-batch size (even)");
    cmd->add_option("--mutation-tolerance", opt.solver.mutation_tolerance,
                    "non-improving generations before mutation activates");
    cmd->add_option("--population", opt.baseline.population_size,
                    "GA/Memetic population size");
    cmd->add_option("--crossover-rate", opt.baseline.crossover_rate,
                    "GA/Memetic crossover rate");
    cmd->add_option("--mutation-rate", opt.baseline.mutation_rate,
                    "GA/Memetic per-element mutation rate");
    cmd->add_option("--refine-iters", opt.baseline.memetic_refine_iters,
                    "memetic per-offspring refinement steps");
    cmd->add_option("--t0", opt.baseline.initial_temperature,
                    "SA initial temperature (score units)");
    cmd->add_option("--cooling", opt.baseline.cooling_rate,
                    "SA geometric cooling rate");
    cmd->add_option("--tenure", opt.baseline.tabu_tenure, "tabu tenure");
    cmd->add_option("--iters", opt.baseline.max_iterations,
                    "baseline iteration/generation budget");
    cmd->add_option_function<double>(
           "--budget",
           [&](double v) {
             budget = v;
             budget_set = true;
           },
           "wall clock budget in seconds")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "run one algorithm");
  solve->add_option("--instance", opt.instance_path, "instance file")
      ->required();
  solve->add_option("--algo", opt.algorithm, "algorithm")
      ->check(CLI::IsMember(kAlgorithms));
  solve->add_option("--seed", opt.seed, "random seed");
  solve->add_option("--out", opt.out_dir,
                    "output directory (default $UCAP_OUT_DIR or .)");
  add_solver_flags(solve);

  CLI::App* compare = app.add_subcommand(
      "compare", "run several algorithms from one shared initial solution");
  compare->add_option("--instance", opt.instance_path, "instance file")
      ->required();
  compare
      ->add_option("--algos", algos,
                   "two or more algorithms (comma separated)")
      ->required()
      ->delimiter(',');
  compare->add_option("--seed", opt.seed, "random seed");
  compare->add_option("--out", opt.out_dir, "output directory");
  add_solver_flags(compare);

  CLI::App* generate =
      app.add_subcommand("generate", "generate a synthetic instance");
  generate->add_option("--spec", spec_path, "generator spec file")->required();
  generate->add_option("--seed", opt.seed, "random seed");
  generate->add_option("--out", out_path, "output instance file")->required();

  CLI::App* validate =
      app.add_subcommand("validate", "evaluate a solution file");
  validate->add_option("--instance", opt.instance_path, "instance file")
      ->required();
  validate->add_option("--solution", solution_path, "solution file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    opt.solver.seed = ucap::RngSeed{opt.seed};
    opt.baseline.seed = ucap::RngSeed{opt.seed};
    if (budget_set) {
      opt.solver.wall_clock_seconds = budget;
      opt.baseline.wall_clock_seconds = budget;
    }

    if (solve->parsed()) return cmd_solve(opt);
    if (compare->parsed()) {
      if (algos.size() < 2) {
        std::cerr << "error: compare needs at least two algorithms\n";
        return 2;
      }
      for (const std::string& a : algos)
        if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) ==
            kAlgorithms.end()) {
          std::cerr << "error: unknown algorithm '" << a << "'\n";
          return 2;
        }
      // In a timed contest every algorithm runs until the shared budget:
      // lift iteration budgets unless the user pinned them.
      if (budget_set) {
        if (!compare->count("--mga-generations"))
          opt.solver.mga_max_generation = std::int64_t{1} << 62;
        if (!compare->count("--lra-iters"))
          opt.solver.lra_total_iteration = std::int64_t{1} << 62;
        if (!compare->count("--iters"))
          opt.baseline.max_iterations = std::int64_t{1} << 62;
      }
      return cmd_compare(opt, algos);
    }
    if (generate->parsed()) return cmd_generate(spec_path, opt.seed, out_path);
    if (validate->parsed())
      return cmd_validate(opt.instance_path, solution_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
