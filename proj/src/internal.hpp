#pragma once

// Helpers shared by the seeding and search translation units. Not installed.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ucap/evaluation.hpp"
#include "ucap/model.hpp"
#include "ucap/rng.hpp"

namespace ucap::detail {

using SolveClock = std::chrono::steady_clock;

inline double seconds_since(SolveClock::time_point t0) {
  return std::chrono::duration<double>(SolveClock::now() - t0).count();
}

inline bool past_budget(SolveClock::time_point t0,
                        const std::optional<double>& budget_seconds) {
  return budget_seconds && seconds_since(t0) >= *budget_seconds;
}

// The 36 weekly slots of a section as a bitmask; clash checks against a
// partial assignment reduce to mask intersection.
inline std::uint64_t slot_mask(const CourseSection& section) {
  std::uint64_t mask = 0;
  for (const SlotIndex s : section.slots) mask |= std::uint64_t{1} << s.value();
  return mask;
}

inline std::vector<std::uint64_t> section_masks(const Instance& instance) {
  std::vector<std::uint64_t> masks(instance.n_sections());
  for (int s = 0; s < instance.n_sections(); ++s)
    masks[s] = slot_mask(instance.section(s));
  return masks;
}

// Fisher-Yates with our own bounded sampling, for platform-stable shuffles.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(static_cast<std::int64_t>(i))]);
}

// Evaluates a start solution and enforces the solver precondition.
inline EvaluationReport checked_start_report(const Instance& instance,
                                             const Solution& start,
                                             const char* algorithm) {
  check_structure(instance, start);
  EvaluationReport report = evaluate(instance, start);
  if (!report.feasible())
    throw InfeasibleError(std::string(algorithm) +
                          " requires a hard-feasible start solution");
  return report;
}

}  // namespace ucap::detail
