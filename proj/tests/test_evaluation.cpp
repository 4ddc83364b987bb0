#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ucap/evaluation.hpp"
#include "ucap/rng.hpp"
#include "ucap/seeding.hpp"

using namespace ucap;
using namespace ucap_test;

namespace {

// Two faculty; A teaches one six-slot section spread over all six days and
// so pays exactly one over_days penalty (0.30); B is idle.
Instance worked_example() {
  return Instance::create({theory("S1", "X", {1, 7, 13, 19, 25, 31})},
                          {fac("A", {"X"}), fac("B", {"X"})});
}

}  // namespace

TEST_CASE("any hard violation zeroes the score exactly") {
  const Instance inst = Instance::create(
      {theory("S1", "X", {0}), theory("S2", "Y", {0})},
      {fac("A", {"X", "Y"}), fac("B", {"X", "Y"})});
  // Slot clash for A.
  const auto report = evaluate(inst, solution_of(inst, {{0}, {0}}));
  CHECK(report.hcv.total() == 1);
  CHECK(report.score() == Score{0, 1});
  CHECK(report.score().value() == 0.0);
}

TEST_CASE("feasible solution with no soft violations scores exactly 1") {
  const Instance inst = Instance::create(
      {theory("S1", "X", {0}), theory("S2", "Y", {13})},
      {fac("A", {"X"}), fac("B", {"Y"}), fac("C", {"X", "Y"})});
  const auto report = evaluate(inst, solution_of(inst, {{0}, {1}}));
  CHECK(report.feasible());
  CHECK(report.score() == Score{1, 1});
  for (const auto& fr : report.per_faculty) {
    CHECK(fr.penalty_sum.units == 0);
    CHECK(fr.clamped_score.units == kFixedScale);
  }
}

TEST_CASE("worked example: penalties {0.30, 0} over two faculty give 0.85") {
  const Instance inst = worked_example();
  const auto report = evaluate(inst, solution_of(inst, {{0}}));
  REQUIRE(report.feasible());
  CHECK(report.per_faculty[0].penalty_sum.units == 3000);
  CHECK(report.per_faculty[1].penalty_sum.units == 0);
  CHECK(report.score() == Score{8500, 10000});
  CHECK(report.score() == reference_score(inst, solution_of(inst, {{0}})));
}

TEST_CASE("a penalty sum above 1 clamps the member to zero") {
  // over_days cranked to 1.4 score units.
  PenaltyConfig pc;
  pc.over_days = Fixed::from_units(14000);
  const Instance inst = Instance::create(
      {theory("S1", "X", {1, 7, 13, 19, 25, 31})}, {fac("A", {"X"})}, pc);
  const auto report = evaluate(inst, solution_of(inst, {{0}}));
  REQUIRE(report.feasible());
  CHECK(report.per_faculty[0].penalty_sum.units == 14000);
  CHECK(report.per_faculty[0].clamped_score.units == 0);
  CHECK(report.score() == Score{0, 10000});
}

TEST_CASE("faculty with no assignments contribute exactly 1") {
  const Instance inst = Instance::create(
      {theory("S1", "X", {0})},
      {fac("A", {"X"}), fac("B", {"X"}), fac("C", {"X"}), fac("D", {"X"})});
  const auto report = evaluate(inst, solution_of(inst, {{0}}));
  CHECK(report.score() == Score{4 * kFixedScale, 4 * kFixedScale});
}

TEST_CASE("reducing one member's violations never lowers the score") {
  const Instance inst = Instance::create(
      {theory("S1", "X", {1, 7, 13, 19, 25, 31}), theory("S2", "X", {3})},
      {fac("A", {"X"}), fac("B", {"X"})});
  // A carries the six-day section either way; S2 on day 0 period 3 opens an
  // idle gap for A unless it moves to B.
  const auto worse = evaluate(inst, solution_of(inst, {{0}, {0}}));
  const auto better = evaluate(inst, solution_of(inst, {{0}, {1}}));
  CHECK(better.per_faculty[0].penalty_sum <= worse.per_faculty[0].penalty_sum);
  CHECK(better.score() >= worse.score());
}

TEST_CASE("evaluate agrees with the reference evaluator on random solutions") {
  GeneratorSpec spec;
  spec.n_faculty = 8;
  spec.n_theory_sections = 10;
  spec.n_lab_sections = 4;
  spec.preference_density = 0.5;
  const Instance inst = generate_instance(spec, RngSeed{21});

  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    // Random (often infeasible) seatings drawn from the full roster.
    std::vector<std::vector<std::int32_t>> seats(inst.n_sections());
    for (int s = 0; s < inst.n_sections(); ++s)
      for (int k = 0; k < inst.section(s).required_seats; ++k)
        seats[s].push_back(rng.below_int(inst.n_faculty()));
    const Solution sol = solution_of(inst, seats);
    const auto report = evaluate(inst, sol);
    CHECK(report.score() == reference_score(inst, sol));
    CHECK(report.score().value() >= 0.0);
    CHECK(report.score().value() <= 1.0);
  }
}

TEST_CASE("delta with an empty changed set returns the cache unchanged") {
  const Instance inst = worked_example();
  const Solution sol = solution_of(inst, {{0}});
  const auto report = evaluate(inst, sol);
  CHECK(evaluate_delta(inst, sol, report, {}) == report);
}

TEST_CASE("delta after a swap equals a full evaluation") {
  const Instance inst = Instance::create(
      {theory("S1", "X", {0}), theory("S2", "Y", {7}), lab("L1", "Z", {14})},
      {fac("A", {"X", "Y", "Z"}), fac("B", {"X", "Y", "Z"}),
       fac("C", {"X", "Y", "Z"})});
  Solution sol = solution_of(inst, {{0}, {1}, {0, 2}});
  auto report = evaluate(inst, sol);

  // Swap the faculty of the two theory seats.
  std::swap(sol.elements[0].faculty, sol.elements[1].faculty);
  const std::int32_t changed[] = {0, 1};
  const auto delta = evaluate_delta(inst, sol, report, changed);
  CHECK(delta == evaluate(inst, sol));
}

TEST_CASE("delta equals full evaluation along a random mutation walk") {
  GeneratorSpec spec;
  spec.n_faculty = 10;
  spec.n_theory_sections = 14;
  spec.n_lab_sections = 5;
  spec.preference_density = 0.45;
  const Instance inst = generate_instance(spec, RngSeed{5});
  Solution sol = initial_solution(inst, RngSeed{5});
  auto cached = evaluate(inst, sol);

  Rng rng(1234);
  for (int step = 0; step < 300; ++step) {
    const int e = rng.below_int(static_cast<int>(sol.elements.size()));
    const std::int32_t old_f = sol.elements[e].faculty;
    // Arbitrary roster member: the walk is allowed to go infeasible.
    const std::int32_t new_f = rng.below_int(inst.n_faculty());
    sol.elements[e].faculty = new_f;
    const std::int32_t changed[] = {old_f, new_f};
    cached = evaluate_delta(inst, sol, cached, changed);
    REQUIRE(cached == evaluate(inst, sol));
  }
}

TEST_CASE("delta rejects out-of-range changed indices") {
  const Instance inst = worked_example();
  const Solution sol = solution_of(inst, {{0}});
  const auto report = evaluate(inst, sol);
  const std::int32_t changed[] = {7};
  CHECK_THROWS_AS(evaluate_delta(inst, sol, report, changed), IntegrityError);
}
