#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ucap/error.hpp"
#include "ucap/fixed.hpp"

namespace ucap {

inline constexpr int kDaysPerWeek = 6;
inline constexpr int kPeriodsPerDay = 6;
inline constexpr int kSlotsPerWeek = kDaysPerWeek * kPeriodsPerDay;  // 36

// One of the 36 weekly day-period positions, encoded as 6*day + period.
class SlotIndex {
 public:
  constexpr SlotIndex() = default;

  // Throws ValidationError unless 0 <= value < 36.
  static SlotIndex from_value(int value);
  // Throws ValidationError unless day and period are both in [0, 5].
  static SlotIndex from_day_period(int day, int period);

  constexpr int value() const { return value_; }
  constexpr int day() const { return value_ / kPeriodsPerDay; }
  constexpr int period() const { return value_ % kPeriodsPerDay; }

  constexpr auto operator<=>(const SlotIndex&) const = default;

 private:
  constexpr explicit SlotIndex(int v) : value_(static_cast<std::uint8_t>(v)) {}
  std::uint8_t value_ = 0;
};

// Encodes (day, period) as a SlotIndex; bijective over 6x6.
inline SlotIndex slot_index(int day, int period) {
  return SlotIndex::from_day_period(day, period);
}

enum class SectionKind : std::uint8_t { Theory, Lab };

inline constexpr int required_seats_for(SectionKind kind) {
  return kind == SectionKind::Lab ? 2 : 1;
}

// One weekly course section. Theory sections need exactly one faculty seat,
// labs exactly two (held by distinct faculty).
struct CourseSection {
  std::string id;    // unique section identifier
  std::string code;  // course code, shared by sections of the same course
  SectionKind kind = SectionKind::Theory;
  std::vector<SlotIndex> slots;  // weekly meetings, non-empty, no duplicates
  Fixed credits;                 // counted in full against each seat holder
  int required_seats = 1;

  bool operator==(const CourseSection&) const = default;
};

struct Faculty {
  std::string id;
  std::string name;
  std::vector<std::string> preferred_courses;  // EOI course codes, non-empty
  Fixed max_credits;
  bool is_senior = false;

  bool operator==(const Faculty&) const = default;
};

// Per-faculty soft-constraint penalty weights, all non-negative.
struct PenaltyConfig {
  Fixed over_days = Fixed::from_units(3000);          // per day beyond 5
  Fixed over_slots_per_day = Fixed::from_units(2000); // per day with >4 slots
  Fixed consecutive_four = Fixed::from_units(2000);   // per day with a 4-run
  Fixed idle_gap = Fixed::from_units(500);            // per idle interior slot
  Fixed senior_lab = Fixed::from_units(2500);         // per senior lab seat
  Fixed senior_early = Fixed::from_units(1500);       // per senior early slot

  bool operator==(const PenaltyConfig&) const = default;
};

// Immutable problem definition. Validated on construction; safe to share
// across concurrent solver runs afterwards.
class Instance {
 public:
  // Validates all model invariants and precomputes eligibility. Throws
  // ValidationError naming the first violated invariant.
  static Instance create(std::vector<CourseSection> sections,
                         std::vector<Faculty> faculty,
                         PenaltyConfig penalties = {});

  int n_sections() const { return static_cast<int>(sections_.size()); }
  int n_faculty() const { return static_cast<int>(faculty_.size()); }
  // Total number of solution elements (sum of required seats).
  int n_elements() const { return n_elements_; }

  const std::vector<CourseSection>& sections() const { return sections_; }
  const std::vector<Faculty>& faculty() const { return faculty_; }
  const CourseSection& section(int i) const { return sections_[i]; }
  const Faculty& faculty_member(int i) const { return faculty_[i]; }
  const PenaltyConfig& penalties() const { return penalties_; }

  // Faculty whose preferred list contains the section's code, in instance
  // order. Eligibility is what the off-preference hard constraint checks.
  std::span<const std::int32_t> eligible_faculty(int section_index) const {
    return eligible_[section_index];
  }

  bool prefers(int faculty_index, int section_index) const {
    return prefers_[faculty_index][section_index] != 0;
  }

  // Index lookups by external id; -1 when absent.
  int find_section(std::string_view id) const;
  int find_faculty(std::string_view id) const;

  bool operator==(const Instance& o) const {
    return sections_ == o.sections_ && faculty_ == o.faculty_ &&
           penalties_ == o.penalties_;
  }

 private:
  Instance() = default;

  std::vector<CourseSection> sections_;
  std::vector<Faculty> faculty_;
  PenaltyConfig penalties_;
  int n_elements_ = 0;
  std::vector<std::vector<std::int32_t>> eligible_;  // per section
  std::vector<std::vector<std::uint8_t>> prefers_;   // faculty x section
  std::unordered_map<std::string, int> section_by_id_;
  std::unordered_map<std::string, int> faculty_by_id_;
};

// One course-section seat: which section, its kind tag, and who teaches it.
// The kind tag duplicates the section's kind for encoding fidelity.
struct Assignment {
  std::int32_t section = -1;
  SectionKind kind_tag = SectionKind::Theory;
  std::int32_t faculty = -1;

  bool operator==(const Assignment&) const = default;
};

// Ordered list of assignments covering every required teaching seat.
struct Solution {
  std::vector<Assignment> elements;

  bool operator==(const Solution&) const = default;
};

// Checks structural well-formedness: indices in range, kind tags matching
// the referenced section, every section filled with exactly required_seats
// elements, and distinct faculty within each section. Throws ValidationError.
void check_structure(const Instance& instance, const Solution& solution);

// Checks only that all section/faculty references are in range; throws
// IntegrityError. Used by evaluation, which must accept structurally broken
// solutions so violations can be reported instead of rejected.
void check_references(const Instance& instance, const Solution& solution);

}  // namespace ucap
