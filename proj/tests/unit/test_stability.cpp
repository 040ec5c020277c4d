#include <set>

#include "doctest.h"
#include "groupzero/stability.hpp"

using namespace gz;

TEST_CASE("symmetric difference of the natural ray") {
  GroupPtr z = make_group("Z");
  SubsetSpec nat = subsets::naturals(z);
  StabilityProfile p = symdiff_profile(z, nat, z->parse("3"), 16);
  CHECK(p.bounded);
  CHECK(p.bound == 3);
  // independent enumeration: N delta (N+3) = {0, 1, 2}
  std::set<long long> expect = {0, 1, 2};
  for (long long k = -30; k <= 30; ++k) {
    bool in_a = k >= 0;
    bool in_ax = k - 3 >= 0;
    CHECK((in_a != in_ax) == (expect.count(k) == 1));
  }
  for (auto& [r, c] : p.by_radius)
    if (r >= 3) CHECK(c == 3);
}

TEST_CASE("finite sets are almost stable with bound at most 2|A|") {
  GroupPtr z2 = make_group("Z^2");
  SubsetSpec a = subsets::finite_list(
      z2, {z2->parse("(0,0)"), z2->parse("(1,2)"), z2->parse("(-3,1)")});
  for (const char* xs : {"(1,0)", "(2,-1)", "(0,3)"}) {
    StabilityProfile p = symdiff_profile(z2, a, z2->parse(xs), 14);
    CAPTURE(xs);
    CHECK(p.bounded);
    CHECK(p.bound <= 6);
  }
}

TEST_CASE("the even integers drift under a unit shift") {
  GroupPtr z = make_group("Z");
  StabilityProfile p =
      symdiff_profile(z, subsets::parity_class(z, 0), z->parse("1"), 20);
  CHECK_FALSE(p.bounded);
  CHECK(p.slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("profile precondition on the window") {
  GroupPtr z = make_group("Z");
  CHECK_THROWS_AS(
      (void)symdiff_profile(z, subsets::naturals(z), z->parse("9"), 10),
      PreconditionError);
}

TEST_CASE("profiles never shrink and never flip to bounded at larger radii") {
  GroupPtr z = make_group("Z");
  for (const char* lit : {"nat", "even"}) {
    SubsetSpec a = parse_subset_literal(lit, z);
    StabilityProfile small = symdiff_profile(z, a, z->parse("2"), 12);
    StabilityProfile large = symdiff_profile(z, a, z->parse("2"), 20);
    for (std::size_t i = 1; i < large.by_radius.size(); ++i)
      CHECK(large.by_radius[i].second >= large.by_radius[i - 1].second);
    if (!small.bounded) CHECK_FALSE(large.bounded);
  }
}

TEST_CASE("translate identity holds pointwise") {
  GroupPtr z2 = make_group("Z^2");
  SubsetSpec a = subsets::halfspace(z2, 0);
  Element x = z2->parse("(1,-1)");
  Element xinv = z2->inv(x);
  Ball b = ball(*z2, 8);
  auto in_translate = [&](const SubsetSpec& s, const Element& g,
                          const Element& t) {
    // g in s.t  <=>  g.t^-1 in s
    return s.contains(z2->mul(g, z2->inv(t)));
  };
  for (const Element& g : b.elements()) {
    bool lhs = a.contains(g) != in_translate(a, g, x);
    Element gx = z2->mul(g, xinv);
    bool rhs = in_translate(a, gx, xinv) != a.contains(gx);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("half-plane is not almost stable in the plane") {
  GroupPtr z2 = make_group("Z^2");
  AlmostStabilityReport rep =
      classify_almost_stable(z2, subsets::halfspace(z2, 0), 12);
  CHECK_FALSE(rep.almost_stable);
  CHECK(rep.size_class == SizeClass::Proper);
  bool x_growing = false;
  for (auto& gv : rep.per_generator)
    if (gv.generator == "x" && !gv.profile.bounded) x_growing = true;
  CHECK(x_growing);
}

TEST_CASE("the natural ray is almost stable and proper") {
  GroupPtr z = make_group("Z");
  AlmostStabilityReport rep =
      classify_almost_stable(z, subsets::naturals(z), 16);
  CHECK(rep.almost_stable);
  CHECK(rep.size_class == SizeClass::Proper);
  CHECK(rep.unresolved_generators.empty());
}

TEST_CASE("size classes at scale") {
  GroupPtr z = make_group("Z");
  auto fin = classify_almost_stable(
      z, subsets::finite_list(z, {z->parse("0"), z->parse("4")}), 16);
  CHECK(fin.size_class == SizeClass::FiniteAtScale);
  CHECK(fin.almost_stable);
  auto cof = classify_almost_stable(
      z, subsets::cofinite_complement(z, {z->parse("1")}), 16);
  CHECK(cof.size_class == SizeClass::CofiniteAtScale);
  CHECK(cof.almost_stable);
}

TEST_CASE("alternating stable partition of the direct sum") {
  GroupPtr g = make_group("DirSumC2");
  StablePartition part = stable_partition_locally_finite(g);
  REQUIRE(part.depth == 8);

  SUBCASE("A picks up the bottom level") {
    CHECK(part.a_sizes[0] == part.level_sizes[0]);
    CHECK(part.A.contains(g->identity()));
  }
  SUBCASE("counts at level 4") {
    CHECK(part.level_sizes[4] == 16);
    CHECK(part.a_sizes[4] == 6);
    CHECK(part.b_sizes[4] == 10);
  }
  SUBCASE("transversals tile each annulus") {
    for (std::size_t n = 0; n < part.transversals.size(); ++n) {
      std::size_t cosets = part.level_sizes[n + 1] / part.level_sizes[n] - 1;
      CHECK(part.transversals[n].size() == cosets);
    }
  }
  SUBCASE("translates meet B in a truncation-independent set") {
    auto g2 = g->chain_members(2);
    auto g1 = g->chain_members(1);
    std::set<Element> lower(g1.begin(), g1.end());
    for (const Element& x : g2) {
      if (lower.count(x)) continue;  // want x in G_2 \ G_1
      for (int R = 2; R <= 8; ++R) {
        std::size_t count = 0;
        for (const Element& a : g->chain_members(R))
          if (part.A.contains(a) && part.B.contains(g->mul(a, x))) ++count;
        CHECK(count == 2);
      }
    }
  }
  SUBCASE("A is almost stable and proper at scale") {
    AlmostStabilityReport rep = classify_almost_stable(g, part.A);
    CHECK(rep.almost_stable);
    CHECK(rep.size_class == SizeClass::Proper);
    CHECK(rep.unresolved_generators.empty());
    CHECK(rep.scale == ScaleKind::ChainScale);
  }
}

TEST_CASE("stable partition of the finitary symmetric chain") {
  GroupOptions opts;
  opts.chain_depth = 4;
  opts.finsym_generators = 3;
  GroupPtr g = make_group("FinSym", opts);
  StablePartition part = stable_partition_locally_finite(g);
  // levels of Sym({0..n}): 1, 2, 6, 24, 120
  CHECK(part.level_sizes == std::vector<std::size_t>{1, 2, 6, 24, 120});
  CHECK(part.a_sizes[4] + part.b_sizes[4] == 120);
  CHECK(part.a_sizes[4] == 1 + 1 + 18);  // levels 0, 1, 3
  AlmostStabilityReport rep = classify_almost_stable(g, part.A);
  CHECK(rep.almost_stable);
  CHECK(rep.size_class == SizeClass::Proper);
}

TEST_CASE("stable partition preconditions") {
  CHECK_THROWS_AS((void)stable_partition_locally_finite(make_group("Z")),
                  PreconditionError);
  CHECK_THROWS_AS((void)stable_partition_locally_finite(make_group("DirSumC2"), 3),
                  PreconditionError);
}
