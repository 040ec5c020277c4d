#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "groupzero/group.hpp"

namespace gz {

/// Symbolic class of a subset; membership must agree with the tag on every
/// tested element.
enum class SubsetTag {
  FiniteList,
  CofiniteComplement,
  Ray,
  AnnulusParity,
  WordLength,
  ParityClass,
  Custom,
};

std::string to_string(SubsetTag t);

/// A subset of the group given by a decidable membership predicate plus
/// symbolic metadata. Copyable; predicates capture what they need by value.
struct SubsetSpec {
  std::string name;
  SubsetTag tag = SubsetTag::Custom;
  std::function<bool(const Element&)> member;

  bool contains(const Element& g) const { return member(g); }
};

namespace subsets {

SubsetSpec finite_list(const GroupPtr& oracle, std::vector<Element> elems);
SubsetSpec cofinite_complement(const GroupPtr& oracle,
                               std::vector<Element> removed);
/// Set-complement with the matching tag swap.
SubsetSpec complement(const SubsetSpec& s);

/// Z only: { k : k >= 0 }.
SubsetSpec naturals(const GroupPtr& oracle);
/// Z / Z^n: coordinate-sum parity class.
SubsetSpec parity_class(const GroupPtr& oracle, int parity);
/// Z^n (n >= 1): first coordinate >= bound.
SubsetSpec halfspace(const GroupPtr& oracle, std::int64_t bound);
/// Word length <= bound (materialized ball membership).
SubsetSpec wordlen_at_most(const GroupPtr& oracle, int bound);

/// Seeded 50/50 split by a hash of the canonical form; A-side. The
/// complement is the B-side.
SubsetSpec hash_side(const GroupPtr& oracle, std::uint64_t seed);

/// Chain oracles: union of chain annuli selected by level parity
/// (level 0 goes with the odd levels so the identity has a home).
SubsetSpec annulus_parity(const GroupPtr& oracle, int parity);
/// Chain oracles: union of chain annuli selected by a seeded bit per level.
SubsetSpec seeded_annulus_side(const GroupPtr& oracle, std::uint64_t seed);

}  // namespace subsets

/// CLI literal grammar:
///   nat | even | odd | halfplane:m>=INT | finite:[e1,e2,...] |
///   cofinite:[e1,...] | wl<=INT | prop10 | end:+ | end:- |
///   hash:SEED | annulus:SEED | complement:LITERAL
SubsetSpec parse_subset_literal(std::string_view literal,
                                const GroupPtr& oracle);

}  // namespace gz
