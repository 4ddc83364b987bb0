#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ucap/model.hpp"

using namespace ucap;
using namespace ucap_test;

TEST_CASE("slot_index encodes day and period") {
  CHECK(slot_index(0, 0).value() == 0);
  CHECK(slot_index(5, 5).value() == 35);
  CHECK(slot_index(2, 3).value() == 15);

  CHECK_THROWS_AS(slot_index(6, 0), ValidationError);
  CHECK_THROWS_AS(slot_index(0, 6), ValidationError);
  CHECK_THROWS_AS(slot_index(-1, 0), ValidationError);
  CHECK_THROWS_AS(SlotIndex::from_value(36), ValidationError);
  CHECK_THROWS_AS(SlotIndex::from_value(-1), ValidationError);
}

TEST_CASE("slot_index is a bijection over all 36 values") {
  std::set<int> seen;
  for (int day = 0; day < kDaysPerWeek; ++day)
    for (int period = 0; period < kPeriodsPerDay; ++period) {
      const SlotIndex s = slot_index(day, period);
      CHECK(s.day() == day);
      CHECK(s.period() == period);
      CHECK(slot_index(s.day(), s.period()) == s);
      seen.insert(s.value());
    }
  CHECK(seen.size() == 36);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 35);
}

TEST_CASE("eligible_faculty filters by preferred code in instance order") {
  const Instance inst = Instance::create(
      {theory("S1", "CS101T", {0}), theory("S2", "CS999T", {1})},
      {fac("A", {"CS101T"}), fac("B", {"CS999T"}), fac("C", {"CS101T", "CS999T"})});

  const auto el = inst.eligible_faculty(0);
  REQUIRE(el.size() == 2);
  CHECK(el[0] == 0);  // A
  CHECK(el[1] == 2);  // C

  // All faculty prefer: full list in instance order.
  const Instance all = Instance::create(
      {theory("S1", "X", {0})}, {fac("A", {"X"}), fac("B", {"X"}), fac("C", {"X"})});
  const auto full = all.eligible_faculty(0);
  REQUIRE(full.size() == 3);
  CHECK((full[0] == 0 && full[1] == 1 && full[2] == 2));
}

TEST_CASE("instance creation rejects invariant violations") {
  // Section preferred by nobody (empty filter) fails the load-time screen.
  CHECK_THROWS_WITH_AS(
      Instance::create({theory("S1", "X", {0})}, {fac("A", {"Y"})}),
      doctest::Contains("insufficient eligible faculty"), ValidationError);

  // Lab with a single eligible faculty member.
  CHECK_THROWS_WITH_AS(
      Instance::create({lab("L1", "X", {0})}, {fac("A", {"X"}), fac("B", {"Y"})}),
      doctest::Contains("insufficient eligible faculty"), ValidationError);

  // Duplicate slot in a section.
  auto dup = theory("S1", "X", {3, 3});
  CHECK_THROWS_WITH_AS(Instance::create({dup}, {fac("A", {"X"})}),
                       doctest::Contains("duplicate slot"), ValidationError);

  // Seat count inconsistent with kind.
  auto bad_seats = theory("S1", "X", {0});
  bad_seats.required_seats = 2;
  CHECK_THROWS_AS(Instance::create({bad_seats}, {fac("A", {"X"})}),
                  ValidationError);

  // Non-positive credits.
  auto free_course = theory("S1", "X", {0}, 0.0);
  CHECK_THROWS_AS(Instance::create({free_course}, {fac("A", {"X"})}),
                  ValidationError);

  CHECK_THROWS_AS(Instance::create({theory("S1", "X", {0})}, {}),
                  ValidationError);
  CHECK_THROWS_AS(
      Instance::create({theory("S1", "X", {0}), theory("S1", "X", {1})},
                       {fac("A", {"X"})}),
      ValidationError);
  CHECK_THROWS_AS(Instance::create({theory("S1", "X", {0})},
                                   {fac("A", {"X"}), fac("A", {"X"})}),
                  ValidationError);
}

TEST_CASE("solution structure checks") {
  const Instance inst = Instance::create(
      {theory("S1", "X", {0}), lab("L1", "Y", {5})},
      {fac("A", {"X", "Y"}), fac("B", {"Y"}), fac("C", {"X", "Y"})});
  CHECK(inst.n_elements() == 3);

  const Solution good = solution_of(inst, {{0}, {1, 2}});
  CHECK_NOTHROW(check_structure(inst, good));

  // Same faculty on both lab seats.
  const Solution dup = solution_of(inst, {{0}, {1, 1}});
  CHECK_THROWS_WITH_AS(check_structure(inst, dup),
                       doctest::Contains("multiple seats"), ValidationError);

  // Seat count off.
  Solution missing = good;
  missing.elements.pop_back();
  CHECK_THROWS_AS(check_structure(inst, missing), ValidationError);

  // Kind tag mismatch.
  Solution bad_tag = good;
  bad_tag.elements[0].kind_tag = SectionKind::Lab;
  CHECK_THROWS_AS(check_structure(inst, bad_tag), ValidationError);

  // Dangling reference.
  Solution dangling = good;
  dangling.elements[0].faculty = 99;
  CHECK_THROWS_AS(check_structure(inst, dangling), IntegrityError);
  CHECK_THROWS_AS(check_references(inst, dangling), IntegrityError);
}
