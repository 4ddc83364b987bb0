#include "ucap/model.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace ucap {
namespace {

// Ids key pipe-delimited solution rows and whitespace-delimited instance
// rows, so they must be plain tokens.
bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  for (const char c : id)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '|' || c == '"')
      return false;
  return true;
}

}  // namespace

SlotIndex SlotIndex::from_value(int value) {
  if (value < 0 || value >= kSlotsPerWeek)
    throw ValidationError("slot index " + std::to_string(value) +
                          " out of range [0, 35]");
  return SlotIndex(value);
}

SlotIndex SlotIndex::from_day_period(int day, int period) {
  if (day < 0 || day >= kDaysPerWeek)
    throw ValidationError("day " + std::to_string(day) +
                          " out of range [0, 5]");
  if (period < 0 || period >= kPeriodsPerDay)
    throw ValidationError("period " + std::to_string(period) +
                          " out of range [0, 5]");
  return SlotIndex(day * kPeriodsPerDay + period);
}

Instance Instance::create(std::vector<CourseSection> sections,
                          std::vector<Faculty> faculty,
                          PenaltyConfig penalties) {
  if (faculty.empty()) throw ValidationError("instance has no faculty");
  if (sections.empty()) throw ValidationError("instance has no sections");

  const Fixed zero{};
  for (const Fixed p : {penalties.over_days, penalties.over_slots_per_day,
                        penalties.consecutive_four, penalties.idle_gap,
                        penalties.senior_lab, penalties.senior_early}) {
    if (p < zero) throw ValidationError("negative penalty value");
  }

  Instance inst;
  inst.penalties_ = penalties;

  for (int i = 0; i < static_cast<int>(sections.size()); ++i) {
    CourseSection& s = sections[i];
    if (!valid_id(s.id))
      throw ValidationError("section id must be a plain token, got '" + s.id +
                            "'");
    if (s.code.empty())
      throw ValidationError("section " + s.id + ": empty course code");
    if (!inst.section_by_id_.emplace(s.id, i).second)
      throw ValidationError("duplicate section id " + s.id);
    if (s.slots.empty())
      throw ValidationError("section " + s.id + ": no weekly slots");
    auto sorted = s.slots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("section " + s.id + ": duplicate slot");
    if (s.credits <= zero)
      throw ValidationError("section " + s.id + ": credits must be positive");
    if (s.required_seats != required_seats_for(s.kind))
      throw ValidationError(
          "section " + s.id + ": required_seats " +
          std::to_string(s.required_seats) + " does not match kind (" +
          (s.kind == SectionKind::Lab ? "lab needs 2" : "theory needs 1") +
          ")");
  }

  for (int f = 0; f < static_cast<int>(faculty.size()); ++f) {
    Faculty& m = faculty[f];
    if (!valid_id(m.id))
      throw ValidationError("faculty id must be a plain token, got '" + m.id +
                            "'");
    if (!inst.faculty_by_id_.emplace(m.id, f).second)
      throw ValidationError("duplicate faculty id " + m.id);
    if (m.preferred_courses.empty())
      throw ValidationError("faculty " + m.id + ": empty preferred list");
    if (m.max_credits <= zero)
      throw ValidationError("faculty " + m.id +
                            ": max_credits must be positive");
  }

  inst.sections_ = std::move(sections);
  inst.faculty_ = std::move(faculty);

  // Preference lookup and per-section eligibility, in instance order.
  std::vector<std::unordered_set<std::string_view>> pref_sets(
      inst.faculty_.size());
  for (std::size_t f = 0; f < inst.faculty_.size(); ++f)
    for (const std::string& code : inst.faculty_[f].preferred_courses)
      pref_sets[f].insert(code);

  inst.prefers_.assign(inst.faculty_.size(),
                       std::vector<std::uint8_t>(inst.sections_.size(), 0));
  inst.eligible_.resize(inst.sections_.size());
  for (int s = 0; s < inst.n_sections(); ++s) {
    const CourseSection& sec = inst.sections_[s];
    for (int f = 0; f < inst.n_faculty(); ++f) {
      if (pref_sets[f].count(sec.code)) {
        inst.prefers_[f][s] = 1;
        inst.eligible_[s].push_back(f);
      }
    }
    if (static_cast<int>(inst.eligible_[s].size()) < sec.required_seats)
      throw ValidationError(
          "section " + sec.id + ": insufficient eligible faculty (" +
          std::to_string(inst.eligible_[s].size()) + " < " +
          std::to_string(sec.required_seats) + ")");
    inst.n_elements_ += sec.required_seats;
  }

  return inst;
}

int Instance::find_section(std::string_view id) const {
  auto it = section_by_id_.find(std::string(id));
  return it == section_by_id_.end() ? -1 : it->second;
}

int Instance::find_faculty(std::string_view id) const {
  auto it = faculty_by_id_.find(std::string(id));
  return it == faculty_by_id_.end() ? -1 : it->second;
}

void check_references(const Instance& instance, const Solution& solution) {
  for (const Assignment& a : solution.elements) {
    if (a.section < 0 || a.section >= instance.n_sections())
      throw IntegrityError("assignment references unknown section index " +
                           std::to_string(a.section));
    if (a.faculty < 0 || a.faculty >= instance.n_faculty())
      throw IntegrityError("assignment references unknown faculty index " +
                           std::to_string(a.faculty));
  }
}

void check_structure(const Instance& instance, const Solution& solution) {
  check_references(instance, solution);
  std::vector<std::vector<std::int32_t>> seats(instance.n_sections());
  for (const Assignment& a : solution.elements) {
    if (a.kind_tag != instance.section(a.section).kind)
      throw ValidationError("kind tag mismatch on section " +
                            instance.section(a.section).id);
    seats[a.section].push_back(a.faculty);
  }
  for (int s = 0; s < instance.n_sections(); ++s) {
    const CourseSection& sec = instance.section(s);
    if (static_cast<int>(seats[s].size()) != sec.required_seats)
      throw ValidationError(
          "section " + sec.id + ": " + std::to_string(seats[s].size()) +
          " seats filled, expected " + std::to_string(sec.required_seats));
    std::sort(seats[s].begin(), seats[s].end());
    if (std::adjacent_find(seats[s].begin(), seats[s].end()) != seats[s].end())
      throw ValidationError("section " + sec.id +
                            ": same faculty holds multiple seats");
  }
}

}  // namespace ucap
