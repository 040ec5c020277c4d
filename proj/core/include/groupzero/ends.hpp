#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupzero/cayley.hpp"
#include "groupzero/group.hpp"
#include "groupzero/subset.hpp"

namespace gz {

enum class EndSide { Positive, Negative };

std::string to_string(EndSide s);

/// One end of a virtually cyclic group, represented as a ray of axis powers
/// times a finite right transversal:
///   K = { z^k . t : t in transversal, k >= tail_start }   (Positive)
///   K = { z^k . t : t in transversal, k <= -tail_start }  (Negative)
/// Membership is decided exactly through the oracle's axis decomposition.
struct EndDescriptor {
  GroupPtr oracle;
  Element axis;
  EndSide side = EndSide::Positive;
  std::vector<Element> transversal;
  int tail_start = 1;  // n0

  bool contains(const Element& g) const { return tail_contains(g, tail_start); }
  /// Membership in the deeper tail { z^k . t : |k| >= n } of the same side.
  bool tail_contains(const Element& g, int n) const;

  SubsetSpec as_subset() const;
  SubsetSpec tail_subset(int n) const;
  std::string describe() const;
};

/// Builds the end of a virtually cyclic catalog entry (Z, Dinf, Z x C_m).
EndDescriptor end_descriptor(const GroupPtr& oracle, EndSide side);

enum class EndsClass { ZeroEnds, OneEnd, TwoEnds, ManyEndsGrowing, UnknownAtScale };

std::string to_string(EndsClass c);

struct EndsReport {
  /// r -> number of outer-layer-touching components of the annulus
  /// { g : r <= wordlen(g) <= R(r) }.
  std::map<int, std::size_t> counts_by_radius;
  /// Present exactly when the counts are constant over the last `window`
  /// radii.
  std::optional<std::size_t> stabilized_count;
  EndsClass classification = EndsClass::UnknownAtScale;
  bool saturated = false;
  int saturation_radius = -1;
  int r_max = 0;
  int window = 0;
  /// r -> outer radius actually used (3r + window, capped by the element cap).
  std::map<int, int> outer_radius_used;
  std::string note;
};

/// Counts annulus components per inner radius and classifies the number of
/// ends at scale. R(r) = 3r + window, shrunk when the element cap binds.
EndsReport ends_estimate(const GroupPtr& oracle, int r_max, int window = 4,
                         std::size_t cap = kDefaultElementCap);

}  // namespace gz
