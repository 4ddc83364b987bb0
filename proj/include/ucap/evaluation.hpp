#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ucap/constraints.hpp"
#include "ucap/model.hpp"

namespace ucap {

// Per-faculty evaluation row. The hard-term contributions are kept so the
// delta path can subtract a member's old share before re-adding the new one.
struct FacultyReport {
  std::int32_t faculty = -1;
  Fixed penalty_sum;
  Fixed clamped_score;  // max(0, 1 - penalty_sum), in fixed units
  std::int32_t clash_count = 0;
  std::int32_t off_preference = 0;
  bool credit_exceeded = false;

  bool operator==(const FacultyReport&) const = default;
};

// Full evaluation of a solution: hard-violation counts, the per-faculty
// penalty breakdown, and the final score.
//
// score() is 0 exactly whenever any hard constraint is violated; otherwise
// it is the mean of the clamped per-faculty scores over all n_f faculty
// (members with no assignments contribute 1).
struct EvaluationReport {
  HardViolations hcv;
  std::vector<FacultyReport> per_faculty;        // indexed by faculty
  std::vector<std::uint8_t> section_violations;  // staffing flags per section
  std::int64_t clamped_total = 0;                // sum of clamped units

  Score score() const {
    const std::int64_t denom =
        kFixedScale * static_cast<std::int64_t>(per_faculty.size());
    if (hcv.total() > 0) return Score{0, denom};
    return Score{clamped_total, denom};
  }

  bool feasible() const { return hcv.total() == 0; }

  bool operator==(const EvaluationReport&) const = default;
};

// Evaluates a solution from scratch. Deterministic; throws IntegrityError on
// dangling references. Structurally broken solutions are scored, not
// rejected: their defects surface as hard violations.
EvaluationReport evaluate(const Instance& instance, const Solution& solution);

// Re-evaluates after a change touching only the given faculty. `cached`
// must be the report for the prior solution and `changed_faculty` must
// cover the old and new holder of every reseated element (a superset only
// costs time); the result then equals evaluate(instance, solution) field
// for field. Cost is two element scans plus the changed members' schedules,
// independent of n_f.
//
// Stale-cache misuse is not detectable by contract; debug builds cross-check
// against a full evaluation.
EvaluationReport evaluate_delta(const Instance& instance,
                                const Solution& solution,
                                const EvaluationReport& cached,
                                std::span<const std::int32_t> changed_faculty);

}  // namespace ucap
