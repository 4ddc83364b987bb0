#pragma once

// Shared builders and test-only oracles. The reference evaluator and the
// exhaustive enumerator are deliberately naive and independent of the
// library's evaluation path.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ucap/evaluation.hpp"
#include "ucap/model.hpp"

namespace ucap_test {

inline ucap::CourseSection theory(std::string id, std::string code,
                                  std::vector<int> slots,
                                  double credits = 3.0) {
  ucap::CourseSection s;
  s.id = std::move(id);
  s.code = std::move(code);
  s.kind = ucap::SectionKind::Theory;
  for (int v : slots) s.slots.push_back(ucap::SlotIndex::from_value(v));
  s.credits = ucap::Fixed::from_units(
      static_cast<std::int64_t>(credits * ucap::kFixedScale));
  s.required_seats = 1;
  return s;
}

inline ucap::CourseSection lab(std::string id, std::string code,
                               std::vector<int> slots, double credits = 1.5) {
  ucap::CourseSection s = theory(std::move(id), std::move(code), std::move(slots), credits);
  s.kind = ucap::SectionKind::Lab;
  s.required_seats = 2;
  return s;
}

inline ucap::Faculty fac(std::string id, std::vector<std::string> prefs,
                         double max_credits = 12.0, bool senior = false) {
  ucap::Faculty f;
  f.id = std::move(id);
  f.name = "Prof " + f.id;
  f.preferred_courses = std::move(prefs);
  f.max_credits = ucap::Fixed::from_units(
      static_cast<std::int64_t>(max_credits * ucap::kFixedScale));
  f.is_senior = senior;
  return f;
}

// Builds a solution in canonical element order from per-section faculty
// index lists.
inline ucap::Solution solution_of(
    const ucap::Instance& instance,
    const std::vector<std::vector<std::int32_t>>& seats) {
  ucap::Solution sol;
  for (int s = 0; s < instance.n_sections(); ++s)
    for (std::int32_t f : seats[s])
      sol.elements.push_back(
          ucap::Assignment{s, instance.section(s).kind, f});
  return sol;
}

// ---------------------------------------------------------------------------
// Reference evaluator: straight transcription of the scoring rules with sets
// and maps, no schedule caching, no delta machinery.

inline ucap::Score reference_score(const ucap::Instance& instance,
                                   const ucap::Solution& solution) {
  const int n_f = instance.n_faculty();

  // Hard violations.
  std::int64_t hard = 0;
  std::map<int, std::vector<int>> by_section;
  for (const auto& a : solution.elements) by_section[a.section].push_back(a.faculty);
  for (int s = 0; s < instance.n_sections(); ++s) {
    const auto& sec = instance.section(s);
    auto it = by_section.find(s);
    const std::vector<int> seats =
        it == by_section.end() ? std::vector<int>{} : it->second;
    if (sec.kind == ucap::SectionKind::Theory) {
      if (seats.size() != 1) ++hard;
    } else {
      std::set<int> distinct(seats.begin(), seats.end());
      if (static_cast<int>(distinct.size()) < sec.required_seats) ++hard;
    }
  }
  for (int f = 0; f < n_f; ++f) {
    std::map<int, int> slot_load;
    std::int64_t credits = 0;
    for (const auto& a : solution.elements) {
      if (a.faculty != f) continue;
      for (const auto slot : instance.section(a.section).slots)
        ++slot_load[slot.value()];
      credits += instance.section(a.section).credits.units;
    }
    for (const auto& [slot, load] : slot_load)
      if (load > 1) hard += load - 1;
    if (credits > instance.faculty_member(f).max_credits.units) ++hard;
    for (const auto& a : solution.elements)
      if (a.faculty == f && !instance.prefers(f, a.section)) ++hard;
  }
  if (hard > 0)
    return ucap::Score{0, ucap::kFixedScale * static_cast<std::int64_t>(n_f)};

  // Soft penalties per faculty.
  const auto& pc = instance.penalties();
  std::int64_t total_clamped = 0;
  for (int f = 0; f < n_f; ++f) {
    std::set<int> occupied;
    int lab_seats = 0;
    for (const auto& a : solution.elements) {
      if (a.faculty != f) continue;
      for (const auto slot : instance.section(a.section).slots)
        occupied.insert(slot.value());
      if (instance.section(a.section).kind == ucap::SectionKind::Lab)
        ++lab_seats;
    }
    std::int64_t penalty = 0;
    int days_worked = 0;
    for (int day = 0; day < 6; ++day) {
      std::vector<int> periods;
      for (int p = 0; p < 6; ++p)
        if (occupied.count(day * 6 + p)) periods.push_back(p);
      if (periods.empty()) continue;
      ++days_worked;
      if (static_cast<int>(periods.size()) > 4)
        penalty += pc.over_slots_per_day.units;
      int run = 1, max_run = 1;
      for (std::size_t i = 1; i < periods.size(); ++i) {
        run = (periods[i] == periods[i - 1] + 1) ? run + 1 : 1;
        max_run = std::max(max_run, run);
      }
      if (max_run >= 4) penalty += pc.consecutive_four.units;
      int gaps = 0;
      for (int p = periods.front(); p <= periods.back(); ++p)
        if (!occupied.count(day * 6 + p)) ++gaps;
      penalty += pc.idle_gap.units * gaps;
      if (instance.faculty_member(f).is_senior && occupied.count(day * 6))
        penalty += pc.senior_early.units;
    }
    if (days_worked > 5) penalty += pc.over_days.units * (days_worked - 5);
    if (instance.faculty_member(f).is_senior)
      penalty += pc.senior_lab.units * lab_seats;
    total_clamped += std::max<std::int64_t>(0, ucap::kFixedScale - penalty);
  }
  return ucap::Score{total_clamped,
                     ucap::kFixedScale * static_cast<std::int64_t>(n_f)};
}

// ---------------------------------------------------------------------------
// Exhaustive oracle: every way of seating every section with distinct
// eligible faculty. `limit` bounds the visited assignment count.

struct EnumerationResult {
  std::int64_t visited = 0;         // all seatings (feasible or not)
  std::int64_t feasible = 0;        // hard-feasible ones
  ucap::Score best_score{0, 1};
  ucap::Solution best_solution;
};

inline void enumerate_rec(const ucap::Instance& instance, int section,
                          std::vector<std::vector<std::int32_t>>& seats,
                          EnumerationResult& out, std::int64_t limit) {
  if (section == instance.n_sections()) {
    ++out.visited;
    if (out.visited > limit) throw std::runtime_error("enumeration limit hit");
    const ucap::Solution sol = solution_of(instance, seats);
    const auto report = ucap::evaluate(instance, sol);
    if (!report.feasible()) return;
    ++out.feasible;
    const ucap::Score score = report.score();
    if (out.feasible == 1 || score > out.best_score) {
      out.best_score = score;
      out.best_solution = sol;
    }
    return;
  }
  const auto eligible = instance.eligible_faculty(section);
  const int k = instance.section(section).required_seats;
  const int n = static_cast<int>(eligible.size());
  // k is 1 or 2; enumerate index combinations.
  if (k == 1) {
    for (int i = 0; i < n; ++i) {
      seats[section] = {eligible[i]};
      enumerate_rec(instance, section + 1, seats, out, limit);
    }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        seats[section] = {eligible[i], eligible[j]};
        enumerate_rec(instance, section + 1, seats, out, limit);
      }
  }
}

inline EnumerationResult enumerate_all(const ucap::Instance& instance,
                                       std::int64_t limit = 2'000'000) {
  EnumerationResult out;
  std::vector<std::vector<std::int32_t>> seats(instance.n_sections());
  enumerate_rec(instance, 0, seats, out, limit);
  return out;
}

}  // namespace ucap_test
