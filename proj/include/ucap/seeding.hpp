#pragma once

#include <cstdint>

#include "ucap/model.hpp"
#include "ucap/rng.hpp"

namespace ucap {

// Parameters for the synthetic benchmark generator. Scale defaults mirror a
// mid-size department: ~100 sections over 40 faculty.
struct GeneratorSpec {
  int n_faculty = 40;
  int n_theory_sections = 70;
  int n_lab_sections = 30;
  // Probability that a faculty member lists a given course code.
  double preference_density = 0.25;
  Fixed credit_limit_min = Fixed::from_units(9 * kFixedScale);
  Fixed credit_limit_max = Fixed::from_units(15 * kFixedScale);
  // Probability that a section meets twice a week instead of once.
  double two_meeting_fraction = 0.5;
  double senior_fraction = 0.2;
};

// Builds a hard-feasible starting solution by randomized greedy seating:
// sections in descending required-seats then descending credits, each seat
// drawn uniformly among eligible faculty that keep all hard constraints
// satisfied. Dead ends restart with a freshly shuffled section order, up to
// 1000 restarts, then throw InfeasibleError naming the first unseatable
// section. Deterministic per (instance, seed).
Solution initial_solution(const Instance& instance, RngSeed seed);

// Generates a synthetic instance that passes load-time feasibility
// screening: every section ends up with at least required_seats eligible
// faculty (preference sets are locally topped up where random density left a
// section short). Deterministic per (spec, seed). Throws InfeasibleError when
// the spec admits no feasible instance (e.g. labs with fewer than two
// faculty) and ValidationError on out-of-range parameters.
Instance generate_instance(const GeneratorSpec& spec, RngSeed seed);

}  // namespace ucap
