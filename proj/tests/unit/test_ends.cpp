#include <set>

#include "doctest.h"
#include "groupzero/ends.hpp"
#include "groupzero/stability.hpp"

using namespace gz;

TEST_CASE("ends of Z stabilize at two") {
  EndsReport rep = ends_estimate(make_group("Z"), 8, 4);
  CHECK(rep.classification == EndsClass::TwoEnds);
  REQUIRE(rep.stabilized_count.has_value());
  CHECK(*rep.stabilized_count == 2);
  for (auto& [r, c] : rep.counts_by_radius) CHECK(c == 2);
  CHECK_FALSE(rep.saturated);
}

TEST_CASE("ends of the plane stabilize at one") {
  EndsReport rep = ends_estimate(make_group("Z^2"), 6, 3);
  CHECK(rep.classification == EndsClass::OneEnd);
  REQUIRE(rep.stabilized_count.has_value());
  CHECK(*rep.stabilized_count == 1);
}

TEST_CASE("finite groups saturate to zero ends") {
  for (const char* name : {"C12", "Sym5"}) {
    CAPTURE(name);
    EndsReport rep = ends_estimate(make_group(name), 6, 3);
    CHECK(rep.classification == EndsClass::ZeroEnds);
    CHECK(rep.saturated);
  }
}

TEST_CASE("two-ended catalog entries") {
  for (const char* name : {"Dinf", "ZxC2", "ZxC6"}) {
    CAPTURE(name);
    EndsReport rep = ends_estimate(make_group(name), 6, 3);
    CHECK(rep.classification == EndsClass::TwoEnds);
  }
}

TEST_CASE("free group component counts grow as 4 * 3^(r-1)") {
  // a small element cap exercises the adaptive outer radius honestly
  EndsReport rep = ends_estimate(make_group("F2"), 3, 2, 100'000);
  CHECK(rep.classification == EndsClass::ManyEndsGrowing);
  CHECK_FALSE(rep.stabilized_count.has_value());
  std::size_t expect = 4;
  for (int r = 1; r <= 3; ++r) {
    REQUIRE(rep.counts_by_radius.count(r) == 1);
    CHECK(rep.counts_by_radius.at(r) == expect);
    expect *= 3;
  }
}

TEST_CASE("ends preconditions") {
  CHECK_THROWS_AS((void)ends_estimate(make_group("Z"), 1, 2), PreconditionError);
  CHECK_THROWS_AS((void)ends_estimate(make_group("Z"), 5, 1), PreconditionError);
}

TEST_CASE("end descriptors of Z") {
  GroupPtr z = make_group("Z");
  EndDescriptor kp = end_descriptor(z, EndSide::Positive);
  CHECK(kp.transversal.size() == 1);
  CHECK(kp.contains(z->parse("1")));
  CHECK(kp.contains(z->parse("7")));
  CHECK_FALSE(kp.contains(z->parse("0")));
  CHECK_FALSE(kp.contains(z->parse("-3")));
  EndDescriptor kn = end_descriptor(z, EndSide::Negative);
  CHECK(kn.contains(z->parse("-1")));
  CHECK_FALSE(kn.contains(z->parse("1")));
}

TEST_CASE("end descriptor of ZxC2 against exhaustive ball membership") {
  GroupPtr g = make_group("ZxC2");
  EndDescriptor k = end_descriptor(g, EndSide::Positive);
  CHECK(k.transversal.size() == 2);
  Ball b = ball(*g, 10);
  for (const Element& e : b.elements()) {
    bool expected = e[0] >= 1;  // (k, c) with k >= 1, any torsion part
    CHECK(k.contains(e) == expected);
  }
}

TEST_CASE("dihedral end matches a stable annulus component") {
  GroupPtr d = make_group("Dinf");
  EndDescriptor k = end_descriptor(d, EndSide::Negative);
  Ball b = ball(*d, 8);
  AnnulusComponents ac = components_outside(*d, b, 2, 8);
  REQUIRE(ac.components.size() == 2);
  std::set<Element> in_k;
  for (std::uint32_t id = 0; id < b.size(); ++id) {
    int w = b.wordlen(id);
    if (w > 2 && w <= 8 && k.contains(b.element(id))) in_k.insert(b.element(id));
  }
  bool matched = false;
  for (const auto& comp : ac.components) {
    std::set<Element> cs;
    for (auto id : comp.ids) cs.insert(b.element(id));
    if (cs == in_k) matched = true;
  }
  CHECK(matched);
}

TEST_CASE("ends of virtually cyclic entries are right-translation almost stable") {
  for (const char* name : {"Z", "Dinf", "ZxC2"}) {
    CAPTURE(name);
    GroupPtr g = make_group(name);
    for (EndSide side : {EndSide::Positive, EndSide::Negative}) {
      SubsetSpec k = end_descriptor(g, side).as_subset();
      for (const Element& s : g->generators()) {
        StabilityProfile p = symdiff_profile(g, k, s, 12);
        CAPTURE(g->format(s));
        CHECK(p.bounded);
      }
    }
  }
}

TEST_CASE("the two ends cover all but boundedly many points") {
  for (const char* name : {"Z", "Dinf", "ZxC2", "ZxC6"}) {
    CAPTURE(name);
    GroupPtr g = make_group(name);
    EndDescriptor kp = end_descriptor(g, EndSide::Positive);
    EndDescriptor kn = end_descriptor(g, EndSide::Negative);
    std::size_t missing_bound = kp.transversal.size();
    for (int R : {4, 7, 10}) {
      Ball b = ball(*g, R);
      std::size_t missing = 0;
      for (const Element& e : b.elements()) {
        CHECK_FALSE((kp.contains(e) && kn.contains(e)));
        if (!kp.contains(e) && !kn.contains(e)) ++missing;
      }
      CHECK(missing <= missing_bound);
    }
  }
}

TEST_CASE("end descriptors require a virtually cyclic entry") {
  CHECK_THROWS_AS((void)end_descriptor(make_group("Z^2"), EndSide::Positive),
                  PreconditionError);
  CHECK_THROWS_AS((void)end_descriptor(make_group("DirSumC2"), EndSide::Positive),
                  PreconditionError);
}
