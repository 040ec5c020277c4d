#include <random>
#include <set>

#include "doctest.h"
#include "groupzero/stability.hpp"
#include "groupzero/topology.hpp"

using namespace gz;

namespace {

bool proven(const TopoVerdict& v) { return v.status == TopoStatus::Proven; }
bool refuted(const TopoVerdict& v) {
  return v.status == TopoStatus::RefutedAtScale;
}

// a seeded nested family of cofinite base elements (a filter-base chain)
std::vector<SubsetSpec> seeded_cofinite_chain(const GroupPtr& g,
                                              std::uint64_t seed, int depth) {
  std::mt19937_64 rng(seed);
  auto pool = sample_elements(*g, 40, 6, seed);
  std::vector<Element> removed;
  std::vector<SubsetSpec> base;
  for (int i = 0; i < depth; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 3; ++k) removed.push_back(pool[pick(rng)]);
    base.push_back(subsets::cofinite_complement(g, removed));
  }
  return base;
}

}  // namespace

TEST_CASE("hausdorff checks per family") {
  GroupPtr z = make_group("Z");
  CHECK(proven(is_hausdorff(discrete_topology(z), 20)));
  CHECK(proven(is_hausdorff(cofinite_topology(z), 20)));
  CHECK(proven(is_hausdorff(end_base_topology(z, EndSide::Positive), 20)));
  // the whole space as the only neighborhood of 0 cannot separate
  auto whole = explicit_topology(z, {subsets::cofinite_complement(z, {})},
                                 "explicit:whole");
  auto v = is_hausdorff(whole, 20);
  CHECK(refuted(v));
  CHECK_FALSE(v.counterexample.empty());
}

TEST_CASE("compactness per family") {
  GroupPtr z = make_group("Z");
  CHECK(proven(is_compact(cofinite_topology(z), 20)));
  auto vd = is_compact(discrete_topology(z), 20);
  CHECK(refuted(vd));
  auto ve = is_compact(end_base_topology(z, EndSide::Positive), 20);
  CHECK(refuted(ve));
  CHECK_FALSE(ve.counterexample.empty());
  // a finite group with the discrete base is compact outright
  GroupPtr c = make_group("C12");
  CHECK(proven(is_compact(discrete_topology(c), 10)));
}

TEST_CASE("local compactness per family") {
  GroupPtr z = make_group("Z");
  auto vd = is_locally_compact(discrete_topology(z), 20);
  CHECK(proven(vd));
  auto vc = is_locally_compact(cofinite_topology(z), 20);
  CHECK(proven(vc));
  auto ve = is_locally_compact(end_base_topology(z, EndSide::Positive), 50);
  CHECK(proven(ve));
  CHECK(ve.witness.find("tail(1)") != std::string::npos);
}

TEST_CASE("shift continuity per family") {
  GroupPtr z = make_group("Z");
  CHECK(proven(check_shift_continuity(discrete_topology(z), 20)));
  CHECK(proven(check_shift_continuity(cofinite_topology(z), 20)));
  CHECK(proven(
      check_shift_continuity(end_base_topology(z, EndSide::Negative), 20)));
  // the even integers cannot absorb a unit shift
  auto evens = explicit_topology(z, {subsets::parity_class(z, 0)},
                                 "explicit:evens");
  auto v = check_shift_continuity(evens, 20);
  CHECK(refuted(v));
  CHECK(v.counterexample.find("even") != std::string::npos);
}

TEST_CASE("semigroup continuity census values") {
  GroupPtr z = make_group("Z");
  CHECK(proven(check_semigroup_continuity(discrete_topology(z), 20)));
  CHECK(proven(
      check_semigroup_continuity(end_base_topology(z, EndSide::Positive), 20)));
  CHECK(proven(
      check_semigroup_continuity(end_base_topology(z, EndSide::Negative), 20)));
  auto v = check_semigroup_continuity(cofinite_topology(z), 20);
  CHECK(refuted(v));
  // the counterexample carries a concrete pair v.w hitting the removed point
  CHECK(v.counterexample.find("v =") != std::string::npos);
  CHECK(v.counterexample.find("w =") != std::string::npos);
}

TEST_CASE("semigroup continuity needs shift continuity first") {
  GroupPtr z = make_group("Z");
  auto evens = explicit_topology(z, {subsets::parity_class(z, 0)},
                                 "explicit:evens");
  CHECK_THROWS_AS((void)check_semigroup_continuity(evens, 20),
                  PreconditionError);
}

TEST_CASE("filter base property") {
  GroupPtr z = make_group("Z");
  CHECK(proven(filter_base_check(discrete_topology(z), 20)));
  CHECK(proven(filter_base_check(cofinite_topology(z), 20)));
  CHECK(proven(filter_base_check(end_base_topology(z, EndSide::Positive), 20)));
  // two disjoint rays admit no common refinement in their union family
  auto bad = explicit_topology(
      z,
      {end_descriptor(z, EndSide::Positive).as_subset(),
       end_descriptor(z, EndSide::Negative).as_subset()},
      "explicit:both-rays");
  CHECK(refuted(filter_base_check(bad, 20)));
}

TEST_CASE("classification of the three symbolic families on Z") {
  GroupPtr z = make_group("Z");
  CHECK(classify_dichotomy(discrete_topology(z), 20).cls ==
        DichotomyClass::Discrete);
  CHECK(classify_dichotomy(cofinite_topology(z), 20).cls ==
        DichotomyClass::Compact);
  auto res = classify_dichotomy(end_base_topology(z, EndSide::Positive), 20);
  CHECK(res.cls == DichotomyClass::Neither);
  CHECK(res.consistent);  // Z is Stable: Neither is allowed
}

TEST_CASE("classification preconditions stop broken bases upstream") {
  GroupPtr z = make_group("Z");
  auto evens = explicit_topology(z, {subsets::parity_class(z, 0)},
                                 "explicit:evens");
  CHECK_THROWS_AS((void)classify_dichotomy(evens, 20), PreconditionError);

  // half-plane tails on the flexible plane die before classification too
  GroupPtr z2 = make_group("Z^2");
  std::vector<SubsetSpec> tails;
  for (int j = 1; j <= 16; ++j) tails.push_back(subsets::halfspace(z2, j));
  auto hp = explicit_topology(z2, tails, "explicit:halfplane-tails");
  bool h = proven(is_hausdorff(hp, 20));
  bool sc = proven(check_shift_continuity(hp, 20));
  bool lc = proven(is_locally_compact(hp, 20));
  CHECK_FALSE((h && sc && lc));
  CHECK_THROWS_AS((void)classify_dichotomy(hp, 20), PreconditionError);
}

TEST_CASE("census of the four zero topologies on Z") {
  ZeroTopologyCensus census = zero_topology_census_on_Z(20);
  REQUIRE(census.entries.size() == 4);
  CHECK(census.entries[0].label == "discrete");
  CHECK(census.entries[1].label == "cofinite");
  CHECK(census.entries[2].label == "end:+");
  CHECK(census.entries[3].label == "end:-");
  std::vector<DichotomyClass> expect = {
      DichotomyClass::Discrete, DichotomyClass::Compact,
      DichotomyClass::Neither, DichotomyClass::Neither};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(i);
    const CensusEntry& e = census.entries[i];
    CHECK(e.classification == expect[i]);
    CHECK(e.consistent);
    CHECK(proven(e.bundle.hausdorff));
    CHECK(proven(e.bundle.shift_continuity));
    CHECK(proven(e.bundle.locally_compact));
    CHECK(proven(e.bundle.filter_base));
  }
  CHECK(census.semigroup_count == 3);
  CHECK(refuted(census.entries[1].semigroup));
  CHECK(census.all_distinct);
  CHECK_FALSE(census.caveats.empty());
}

TEST_CASE("census output is stable across scales") {
  auto c20 = zero_topology_census_on_Z(20);
  auto c50 = zero_topology_census_on_Z(50);
  auto c100 = zero_topology_census_on_Z(100);
  for (const auto* c : {&c50, &c100}) {
    REQUIRE(c->entries.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(c->entries[i].classification == c20.entries[i].classification);
      CHECK(c->entries[i].semigroup.status == c20.entries[i].semigroup.status);
    }
    CHECK(c->semigroup_count == c20.semigroup_count);
    CHECK(c->all_distinct);
  }
}

TEST_CASE("end-tail bundles on the two-ended entries") {
  for (const char* name : {"ZxC2", "Dinf"}) {
    CAPTURE(name);
    GroupPtr g = make_group(name);
    for (EndSide side : {EndSide::Positive, EndSide::Negative}) {
      CAPTURE(side == EndSide::Positive);
      auto spec = end_base_topology(g, side);
      VerdictBundle vb = full_bundle(spec, 30);
      CHECK(proven(vb.hausdorff));
      CHECK(proven(vb.shift_continuity));
      CHECK(proven(vb.locally_compact));
      CHECK(proven(vb.filter_base));
      CHECK(refuted(vb.compact));
      CHECK(vb.not_discrete);
      auto res = classify_dichotomy(spec, 30);
      CHECK(res.cls == DichotomyClass::Neither);
      CHECK(res.consistent);
    }
  }
}

TEST_CASE("dihedral end-tail topology is not a semigroup topology") {
  GroupPtr d = make_group("Dinf");
  auto v = check_semigroup_continuity(
      end_base_topology(d, EndSide::Negative), 20);
  CHECK(refuted(v));
  CHECK_FALSE(v.counterexample.empty());
}

TEST_CASE("zero ideal check") {
  for (const char* name : {"Z", "F2", "DirSumC2"}) {
    CAPTURE(name);
    auto v = zero_ideal_check(make_group(name), 6);
    CHECK(proven(v));
  }
}

TEST_CASE("local compactness bridges to almost stability") {
  GroupPtr z = make_group("Z");
  std::vector<ZeroTopologySpec> specs = {
      discrete_topology(z), cofinite_topology(z),
      end_base_topology(z, EndSide::Positive),
      end_base_topology(z, EndSide::Negative)};
  for (const auto& spec : specs) {
    CAPTURE(spec.label);
    auto body = locally_compact_witness(spec, 20);
    REQUIRE(body.has_value());
    for (const Element& s : z->generators()) {
      StabilityProfile p = symdiff_profile(z, *body, s, 14);
      CHECK(p.bounded);
    }
  }
}

TEST_CASE("passing explicit families on flexible oracles never classify Neither") {
  GroupPtr z2 = make_group("Z^2");
  int classified = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto base = seeded_cofinite_chain(z2, seed, 4);
    if (seed % 3 == 0)
      base.push_back(subsets::finite_list(z2, {}));  // adds a {0}-like element
    auto spec = explicit_topology(z2, base, "explicit:seeded");
    bool pre = proven(is_hausdorff(spec, 12)) &&
               proven(check_shift_continuity(spec, 12)) &&
               proven(is_locally_compact(spec, 12));
    if (!pre) continue;
    auto res = classify_dichotomy(spec, 12);
    ++classified;
    CHECK(res.cls != DichotomyClass::Neither);
    CHECK(res.consistent);
  }
  CHECK(classified > 0);
}

TEST_CASE("explicit base caps and parsing") {
  GroupPtr z = make_group("Z");
  std::vector<SubsetSpec> too_many;
  for (int i = 0; i < 65; ++i)
    too_many.push_back(subsets::cofinite_complement(z, {}));
  CHECK_THROWS_AS((void)explicit_topology(z, too_many, "x"), PreconditionError);
  CHECK_THROWS_AS((void)parse_topology_spec("nonsense", z), ParseError);
  auto spec = parse_topology_spec("end:+", z);
  CHECK(spec.family == BaseFamily::EndBase);
}
