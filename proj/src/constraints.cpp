#include "ucap/constraints.hpp"

#include <algorithm>

namespace ucap {

void FacultySchedule::add_seat(const Instance& instance, const Assignment& a) {
  const CourseSection& sec = instance.section(a.section);
  for (const SlotIndex slot : sec.slots) ++slot_load[slot.value()];
  total_credits += sec.credits;
  if (sec.kind == SectionKind::Lab) ++lab_seats;
  if (!instance.prefers(faculty, a.section)) ++off_preference;
}

FacultySchedule build_schedule(const Instance& instance,
                               const Solution& solution, int faculty) {
  FacultySchedule sched;
  sched.faculty = faculty;
  for (const Assignment& a : solution.elements)
    if (a.faculty == faculty) sched.add_seat(instance, a);
  return sched;
}

std::vector<FacultySchedule> build_schedules(const Instance& instance,
                                             const Solution& solution) {
  check_references(instance, solution);
  std::vector<FacultySchedule> schedules(instance.n_faculty());
  for (int f = 0; f < instance.n_faculty(); ++f) schedules[f].faculty = f;
  for (const Assignment& a : solution.elements)
    schedules[a.faculty].add_seat(instance, a);
  return schedules;
}

std::int32_t clash_count(const FacultySchedule& schedule) {
  std::int32_t clashes = 0;
  for (const std::uint8_t load : schedule.slot_load)
    if (load > 1) clashes += load - 1;
  return clashes;
}

std::vector<std::uint8_t> section_staffing_violations(
    const Instance& instance, const Solution& solution) {
  std::vector<std::vector<std::int32_t>> seats(instance.n_sections());
  for (const Assignment& a : solution.elements)
    seats[a.section].push_back(a.faculty);

  std::vector<std::uint8_t> flags(instance.n_sections(), 0);
  for (int s = 0; s < instance.n_sections(); ++s) {
    const CourseSection& sec = instance.section(s);
    if (sec.kind == SectionKind::Theory) {
      if (seats[s].size() != 1) flags[s] = 1;
    } else {
      std::sort(seats[s].begin(), seats[s].end());
      const auto distinct =
          std::unique(seats[s].begin(), seats[s].end()) - seats[s].begin();
      if (distinct < sec.required_seats) flags[s] = 1;
    }
  }
  return flags;
}

HardViolations count_hard_violations(const Instance& instance,
                                     const Solution& solution) {
  const std::vector<FacultySchedule> schedules =
      build_schedules(instance, solution);

  HardViolations hv;
  for (int f = 0; f < instance.n_faculty(); ++f) {
    hv.slot_clash += clash_count(schedules[f]);
    hv.off_preference += schedules[f].off_preference;
    if (schedules[f].total_credits > instance.faculty_member(f).max_credits)
      ++hv.credit_exceeded;
  }
  const std::vector<std::uint8_t> flags =
      section_staffing_violations(instance, solution);
  for (int s = 0; s < instance.n_sections(); ++s) {
    if (!flags[s]) continue;
    if (instance.section(s).kind == SectionKind::Theory)
      ++hv.theory_unstaffed;
    else
      ++hv.lab_understaffed;
  }
  return hv;
}

const char* soft_constraint_name(SoftConstraint c) {
  switch (c) {
    case SoftConstraint::OverDays: return "over_days";
    case SoftConstraint::OverSlotsPerDay: return "over_slots_per_day";
    case SoftConstraint::ConsecutiveFour: return "consecutive_four";
    case SoftConstraint::IdleGap: return "idle_gap";
    case SoftConstraint::SeniorLab: return "senior_lab";
    case SoftConstraint::SeniorEarly: return "senior_early";
  }
  return "?";
}

namespace {

template <typename Emit>
void for_each_soft_penalty(const Instance& instance,
                           const FacultySchedule& schedule, Emit&& emit) {
  const PenaltyConfig& p = instance.penalties();
  const bool senior = instance.faculty_member(schedule.faculty).is_senior;

  int days_worked = 0;
  for (int day = 0; day < kDaysPerWeek; ++day) {
    int taught = 0;      // distinct occupied periods
    int first = -1, last = -1;
    int run = 0, max_run = 0;
    for (int period = 0; period < kPeriodsPerDay; ++period) {
      if (schedule.slot_load[day * kPeriodsPerDay + period] > 0) {
        ++taught;
        if (first < 0) first = period;
        last = period;
        max_run = std::max(max_run, ++run);
      } else {
        run = 0;
      }
    }
    if (taught == 0) continue;
    ++days_worked;
    if (taught > 4) emit(SoftConstraint::OverSlotsPerDay, p.over_slots_per_day);
    if (max_run >= 4) emit(SoftConstraint::ConsecutiveFour, p.consecutive_four);
    const int gap = (last - first + 1) - taught;
    if (gap > 0) emit(SoftConstraint::IdleGap, p.idle_gap * gap);
    if (senior && schedule.slot_load[day * kPeriodsPerDay] > 0)
      emit(SoftConstraint::SeniorEarly, p.senior_early);
  }
  for (int day = 5; day < days_worked; ++day)
    emit(SoftConstraint::OverDays, p.over_days);
  if (senior)
    for (int seat = 0; seat < schedule.lab_seats; ++seat)
      emit(SoftConstraint::SeniorLab, p.senior_lab);
}

}  // namespace

std::vector<SoftPenalty> soft_penalties(const Instance& instance,
                                        const FacultySchedule& schedule) {
  std::vector<SoftPenalty> entries;
  for_each_soft_penalty(instance, schedule,
                        [&](SoftConstraint c, Fixed amount) {
                          entries.push_back(SoftPenalty{c, amount});
                        });
  return entries;
}

Fixed soft_penalty_sum(const Instance& instance,
                       const FacultySchedule& schedule) {
  Fixed sum;
  for_each_soft_penalty(instance, schedule,
                        [&](SoftConstraint, Fixed amount) { sum += amount; });
  return sum;
}

}  // namespace ucap
