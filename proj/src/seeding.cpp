#include "ucap/seeding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "internal.hpp"

namespace ucap {
namespace {

constexpr std::uint64_t kTagInitialSolution = 0x1715'eedULL;
constexpr std::uint64_t kTagGenerate = 0x6e6e'7261ULL;

constexpr int kMaxSeatingRestarts = 1000;

std::string zero_padded(int value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width)
    s.insert(0, width - s.size(), '0');
  return s;
}

}  // namespace

Solution initial_solution(const Instance& instance, RngSeed seed) {
  Rng rng(derive_seed(seed, kTagInitialSolution));
  const std::vector<std::uint64_t> masks = detail::section_masks(instance);

  // Seating order: hardest sections first (more seats, then more credits),
  // reshuffled on every restart.
  std::vector<int> order(instance.n_sections());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const CourseSection& sa = instance.section(a);
    const CourseSection& sb = instance.section(b);
    if (sa.required_seats != sb.required_seats)
      return sa.required_seats > sb.required_seats;
    return sa.credits > sb.credits;
  });

  int failed_section = -1;
  for (int attempt = 0; attempt <= kMaxSeatingRestarts; ++attempt) {
    if (attempt > 0) detail::shuffle(order, rng);

    std::vector<std::uint64_t> occupied(instance.n_faculty(), 0);
    std::vector<Fixed> load(instance.n_faculty());
    std::vector<std::vector<std::int32_t>> seats(instance.n_sections());

    bool dead_end = false;
    std::vector<std::int32_t> candidates;
    for (const int s : order) {
      const CourseSection& sec = instance.section(s);
      for (int seat = 0; seat < sec.required_seats; ++seat) {
        candidates.clear();
        for (const std::int32_t f : instance.eligible_faculty(s)) {
          if ((occupied[f] & masks[s]) != 0) continue;
          if (load[f] + sec.credits > instance.faculty_member(f).max_credits)
            continue;
          if (std::find(seats[s].begin(), seats[s].end(), f) != seats[s].end())
            continue;
          candidates.push_back(f);
        }
        if (candidates.empty()) {
          if (failed_section < 0) failed_section = s;
          dead_end = true;
          break;
        }
        const std::int32_t pick =
            candidates[rng.below(static_cast<std::int64_t>(candidates.size()))];
        seats[s].push_back(pick);
        occupied[pick] |= masks[s];
        load[pick] += sec.credits;
      }
      if (dead_end) break;
    }
    if (dead_end) continue;

    Solution solution;
    solution.elements.reserve(instance.n_elements());
    for (int s = 0; s < instance.n_sections(); ++s)
      for (const std::int32_t f : seats[s])
        solution.elements.push_back(
            Assignment{s, instance.section(s).kind, f});
    check_structure(instance, solution);
    return solution;
  }

  throw InfeasibleError(
      "no hard-feasible initial solution after " +
      std::to_string(kMaxSeatingRestarts) + " restarts; first unseatable "
      "section: " +
      (failed_section >= 0 ? instance.section(failed_section).id : "?"));
}

Instance generate_instance(const GeneratorSpec& spec, RngSeed seed) {
  const int n_sections = spec.n_theory_sections + spec.n_lab_sections;
  if (spec.n_lab_sections > 0 && spec.n_faculty < 2)
    throw InfeasibleError(
        "lab sections need two distinct faculty; spec has fewer than two");
  if (spec.n_faculty < 1 || n_sections < 1)
    throw ValidationError("generator spec needs faculty and sections");
  if (spec.n_theory_sections < 0 || spec.n_lab_sections < 0)
    throw ValidationError("negative section count");
  if (!(spec.preference_density > 0.0 && spec.preference_density <= 1.0))
    throw ValidationError("preference_density must be in (0, 1]");
  if (spec.two_meeting_fraction < 0.0 || spec.two_meeting_fraction > 1.0)
    throw ValidationError("two_meeting_fraction must be in [0, 1]");
  if (spec.senior_fraction < 0.0 || spec.senior_fraction > 1.0)
    throw ValidationError("senior_fraction must be in [0, 1]");
  if (spec.credit_limit_min.units <= 0 ||
      spec.credit_limit_max < spec.credit_limit_min)
    throw ValidationError("bad credit limit range");
  // Expected eligible faculty per section must cover the seats.
  const double expected_eligible = spec.preference_density * spec.n_faculty;
  if (expected_eligible < 1.0 ||
      (spec.n_lab_sections > 0 && expected_eligible < 2.0))
    throw ValidationError(
        "preference_density * n_faculty too small to admit feasibility");

  Rng rng(derive_seed(seed, kTagGenerate));

  std::vector<CourseSection> sections;
  sections.reserve(n_sections);
  const auto draw_slots = [&rng, &spec]() {
    std::vector<SlotIndex> slots;
    slots.push_back(SlotIndex::from_value(rng.below_int(kSlotsPerWeek)));
    if (rng.chance(spec.two_meeting_fraction)) {
      SlotIndex second = slots[0];
      while (second == slots[0])
        second = SlotIndex::from_value(rng.below_int(kSlotsPerWeek));
      slots.push_back(second);
    }
    return slots;
  };
  for (int i = 0; i < spec.n_theory_sections; ++i) {
    CourseSection s;
    s.id = "T" + zero_padded(i + 1, 3);
    s.code = "C" + zero_padded(i, 3) + "T";
    s.kind = SectionKind::Theory;
    s.slots = draw_slots();
    s.credits = Fixed::from_units(3 * kFixedScale);
    s.required_seats = 1;
    sections.push_back(std::move(s));
  }
  for (int i = 0; i < spec.n_lab_sections; ++i) {
    CourseSection s;
    s.id = "L" + zero_padded(i + 1, 3);
    s.code = "C" + zero_padded(spec.n_theory_sections + i, 3) + "L";
    s.kind = SectionKind::Lab;
    s.slots = draw_slots();
    s.credits = Fixed::from_units(3 * kFixedScale / 2);  // 1.5
    s.required_seats = 2;
    sections.push_back(std::move(s));
  }

  std::vector<Faculty> faculty(spec.n_faculty);
  const std::int64_t credit_steps =
      (spec.credit_limit_max.units - spec.credit_limit_min.units) /
          (kFixedScale / 2) +
      1;
  for (int f = 0; f < spec.n_faculty; ++f) {
    faculty[f].id = "F" + zero_padded(f + 1, 3);
    faculty[f].name = "Faculty " + std::to_string(f + 1);
    faculty[f].max_credits = Fixed::from_units(
        spec.credit_limit_min.units + (kFixedScale / 2) * rng.below(credit_steps));
    faculty[f].is_senior = rng.chance(spec.senior_fraction);
  }

  // Preference matrix by density, then local top-ups so every section has
  // at least required_seats eligible faculty.
  std::vector<std::vector<std::uint8_t>> prefers(
      spec.n_faculty, std::vector<std::uint8_t>(n_sections, 0));
  for (int f = 0; f < spec.n_faculty; ++f)
    for (int s = 0; s < n_sections; ++s)
      if (rng.chance(spec.preference_density)) prefers[f][s] = 1;

  std::vector<std::int32_t> missing;
  for (int s = 0; s < n_sections; ++s) {
    int eligible = 0;
    for (int f = 0; f < spec.n_faculty; ++f) eligible += prefers[f][s];
    while (eligible < sections[s].required_seats) {
      missing.clear();
      for (int f = 0; f < spec.n_faculty; ++f)
        if (!prefers[f][s]) missing.push_back(f);
      prefers[missing[rng.below(static_cast<std::int64_t>(missing.size()))]]
             [s] = 1;
      ++eligible;
    }
  }

  for (int f = 0; f < spec.n_faculty; ++f) {
    bool any = false;
    for (int s = 0; s < n_sections; ++s) any = any || prefers[f][s];
    if (!any) prefers[f][rng.below(n_sections)] = 1;
    for (int s = 0; s < n_sections; ++s)
      if (prefers[f][s]) faculty[f].preferred_courses.push_back(sections[s].code);
  }

  return Instance::create(std::move(sections), std::move(faculty));
}

}  // namespace ucap
