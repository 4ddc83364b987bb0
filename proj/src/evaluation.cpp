#include "ucap/evaluation.hpp"

#include <algorithm>
#include <cassert>

namespace ucap {
namespace {

FacultyReport report_for(const Instance& instance,
                         const FacultySchedule& schedule) {
  FacultyReport r;
  r.faculty = schedule.faculty;
  r.penalty_sum = soft_penalty_sum(instance, schedule);
  r.clamped_score =
      Fixed::from_units(std::max<std::int64_t>(0, kFixedScale - r.penalty_sum.units));
  r.clash_count = clash_count(schedule);
  r.off_preference = schedule.off_preference;
  r.credit_exceeded = schedule.total_credits >
                      instance.faculty_member(schedule.faculty).max_credits;
  return r;
}

// Adds (sign=+1) or removes (sign=-1) one member's share of the totals.
void apply_faculty_terms(EvaluationReport& report, const FacultyReport& fr,
                         int sign) {
  report.hcv.slot_clash += sign * fr.clash_count;
  report.hcv.off_preference += sign * fr.off_preference;
  report.hcv.credit_exceeded += sign * (fr.credit_exceeded ? 1 : 0);
  report.clamped_total += sign * fr.clamped_score.units;
}

void apply_section_flag(EvaluationReport& report, const Instance& instance,
                        int section, std::uint8_t flag, int sign) {
  if (!flag) return;
  if (instance.section(section).kind == SectionKind::Theory)
    report.hcv.theory_unstaffed += sign;
  else
    report.hcv.lab_understaffed += sign;
}

std::uint8_t staffing_flag(const Instance& instance, int section,
                           std::vector<std::int32_t>& seats) {
  const CourseSection& sec = instance.section(section);
  if (sec.kind == SectionKind::Theory) return seats.size() != 1 ? 1 : 0;
  std::sort(seats.begin(), seats.end());
  const auto distinct =
      std::unique(seats.begin(), seats.end()) - seats.begin();
  return distinct < sec.required_seats ? 1 : 0;
}

}  // namespace

EvaluationReport evaluate(const Instance& instance, const Solution& solution) {
  const std::vector<FacultySchedule> schedules =
      build_schedules(instance, solution);

  EvaluationReport report;
  report.per_faculty.reserve(instance.n_faculty());
  for (int f = 0; f < instance.n_faculty(); ++f) {
    report.per_faculty.push_back(report_for(instance, schedules[f]));
    apply_faculty_terms(report, report.per_faculty.back(), +1);
  }
  report.section_violations = section_staffing_violations(instance, solution);
  for (int s = 0; s < instance.n_sections(); ++s)
    apply_section_flag(report, instance, s, report.section_violations[s], +1);
  return report;
}

EvaluationReport evaluate_delta(const Instance& instance,
                                const Solution& solution,
                                const EvaluationReport& cached,
                                std::span<const std::int32_t> changed_faculty) {
  if (changed_faculty.empty()) return cached;

  std::vector<std::int32_t> changed(changed_faculty.begin(),
                                    changed_faculty.end());
  std::sort(changed.begin(), changed.end());
  changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
  for (const std::int32_t f : changed)
    if (f < 0 || f >= instance.n_faculty())
      throw IntegrityError("changed faculty index " + std::to_string(f) +
                           " out of range");

  EvaluationReport report = cached;

  // Rebuild the changed members' schedules in one pass; any section whose
  // staffing could have changed contains an element now held by a changed
  // member, so collect those too.
  std::vector<std::int32_t> position(instance.n_faculty(), -1);
  std::vector<FacultySchedule> schedules(changed.size());
  for (std::size_t i = 0; i < changed.size(); ++i) {
    position[changed[i]] = static_cast<std::int32_t>(i);
    schedules[i].faculty = changed[i];
  }

  std::vector<std::int32_t> affected_sections;
  std::vector<std::uint8_t> section_seen(instance.n_sections(), 0);
  for (const Assignment& a : solution.elements) {
    if (a.section < 0 || a.section >= instance.n_sections() || a.faculty < 0 ||
        a.faculty >= instance.n_faculty())
      throw IntegrityError("assignment references unknown section or faculty");
    const std::int32_t pos = position[a.faculty];
    if (pos < 0) continue;
    schedules[pos].add_seat(instance, a);
    if (!section_seen[a.section]) {
      section_seen[a.section] = 1;
      affected_sections.push_back(a.section);
    }
  }

  for (std::size_t i = 0; i < changed.size(); ++i) {
    apply_faculty_terms(report, cached.per_faculty[changed[i]], -1);
    FacultyReport fr = report_for(instance, schedules[i]);
    apply_faculty_terms(report, fr, +1);
    report.per_faculty[changed[i]] = std::move(fr);
  }

  if (!affected_sections.empty()) {
    std::vector<std::vector<std::int32_t>> seats(affected_sections.size());
    std::vector<std::int32_t> slot_of(instance.n_sections(), -1);
    for (std::size_t i = 0; i < affected_sections.size(); ++i)
      slot_of[affected_sections[i]] = static_cast<std::int32_t>(i);
    for (const Assignment& a : solution.elements)
      if (slot_of[a.section] >= 0) seats[slot_of[a.section]].push_back(a.faculty);
    for (std::size_t i = 0; i < affected_sections.size(); ++i) {
      const std::int32_t s = affected_sections[i];
      const std::uint8_t flag = staffing_flag(instance, s, seats[i]);
      apply_section_flag(report, instance, s, report.section_violations[s], -1);
      apply_section_flag(report, instance, s, flag, +1);
      report.section_violations[s] = flag;
    }
  }

#ifndef NDEBUG
  assert(report == evaluate(instance, solution));
#endif
  return report;
}

}  // namespace ucap
