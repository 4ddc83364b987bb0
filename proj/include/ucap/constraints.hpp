#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ucap/model.hpp"

namespace ucap {

// Everything a faculty member's constraint checks need, aggregated over all
// of their assigned sections. Rebuilding from scratch always equals
// incremental maintenance; the delta evaluation path relies on that.
struct FacultySchedule {
  std::int32_t faculty = -1;
  std::array<std::uint8_t, kSlotsPerWeek> slot_load{};  // assignments per slot
  std::int32_t lab_seats = 0;
  std::int32_t off_preference = 0;  // seats outside the preferred list
  Fixed total_credits;

  void add_seat(const Instance& instance, const Assignment& a);

  bool operator==(const FacultySchedule&) const = default;
};

FacultySchedule build_schedule(const Instance& instance,
                               const Solution& solution, int faculty);
std::vector<FacultySchedule> build_schedules(const Instance& instance,
                                             const Solution& solution);

// Counts of the five hard constraints. total() == 0 is the feasibility gate.
struct HardViolations {
  std::int32_t theory_unstaffed = 0;   // theory sections with != 1 seat filled
  std::int32_t lab_understaffed = 0;   // labs with < 2 distinct faculty
  std::int32_t slot_clash = 0;         // excess same-slot assignments
  std::int32_t credit_exceeded = 0;    // faculty over their credit limit
  std::int32_t off_preference = 0;     // seats outside the preferred list

  std::int32_t total() const {
    return theory_unstaffed + lab_understaffed + slot_clash + credit_exceeded +
           off_preference;
  }

  bool operator==(const HardViolations&) const = default;
};

// Per-(faculty, slot) clash count: sum of max(0, load - 1).
std::int32_t clash_count(const FacultySchedule& schedule);

// Per-section staffing violations (theory != 1 filled, lab < required
// distinct faculty), one flag per section.
std::vector<std::uint8_t> section_staffing_violations(const Instance& instance,
                                                      const Solution& solution);

// Full hard-constraint count over a solution. Order of elements never
// matters; all checks are aggregate-based. Throws IntegrityError on dangling
// references.
HardViolations count_hard_violations(const Instance& instance,
                                     const Solution& solution);

enum class SoftConstraint : std::uint8_t {
  OverDays,         // SC1: more than five working days
  OverSlotsPerDay,  // SC2: more than four taught slots in a day
  ConsecutiveFour,  // SC3: four consecutive taught slots in a day
  IdleGap,          // SC4: idle slots inside a day's span
  SeniorLab,        // SC5: senior faculty holding a lab seat
  SeniorEarly,      // SC5: senior faculty teaching an early-hour slot
};

const char* soft_constraint_name(SoftConstraint c);

struct SoftPenalty {
  SoftConstraint constraint;
  Fixed amount;

  bool operator==(const SoftPenalty&) const = default;
};

// One entry per violation occurrence, per the member's weekly schedule:
//   SC1 per working day beyond five;
//   SC2 per day with more than four taught slots;
//   SC3 per day containing a run of at least four consecutive taught slots;
//   SC4 per day with idle slots strictly between its first and last class,
//       weighted by the day's idle-slot count;
//   SC5 per lab seat and per taught early-hour slot (period 0), senior only.
std::vector<SoftPenalty> soft_penalties(const Instance& instance,
                                        const FacultySchedule& schedule);

// Sum of soft_penalties amounts without materializing the list.
Fixed soft_penalty_sum(const Instance& instance,
                       const FacultySchedule& schedule);

}  // namespace ucap
