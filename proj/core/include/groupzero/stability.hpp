#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupzero/cayley.hpp"
#include "groupzero/group.hpp"
#include "groupzero/subset.hpp"

namespace gz {

/// Which truncation family a profile was measured along: generator balls for
/// finitely generated entries, chain truncations G_R for locally finite ones
/// (generator balls of a truncated generating set cannot witness the top
/// generators stabilizing, the chain can).
enum class ScaleKind { BallScale, ChainScale };

std::string to_string(ScaleKind k);

struct StabilityProfile {
  /// radius -> |(A delta A.x)| inside the truncation of that radius;
  /// non-decreasing.
  std::vector<std::pair<int, std::size_t>> by_radius;
  bool bounded = false;
  std::size_t bound = 0;   // final count, when bounded
  double slope = 0.0;      // least-squares slope, when growing
  ScaleKind scale = ScaleKind::BallScale;
  std::string note;
};

/// Counts |(A delta (A.x))| along truncations up to r_max. Requires
/// r_max >= wordlen(x) + 2 (chain level + 2 on the chain scale).
StabilityProfile symdiff_profile(const GroupPtr& oracle, const SubsetSpec& A,
                                 const Element& x, int r_max,
                                 std::size_t cap = kDefaultElementCap);

enum class SizeClass { FiniteAtScale, CofiniteAtScale, Proper };

std::string to_string(SizeClass c);

struct GeneratorVerdict {
  std::string generator;
  StabilityProfile profile;
};

struct AlmostStabilityReport {
  bool almost_stable = false;  // bounded for every resolved generator
  SizeClass size_class = SizeClass::Proper;
  std::vector<GeneratorVerdict> per_generator;
  /// Generators whose stabilization window did not fit below the truncation
  /// (only possible for chain oracles whose generator list outruns the
  /// materializable chain); empty in the supported configurations.
  std::vector<std::string> unresolved_generators;
  ScaleKind scale = ScaleKind::BallScale;
  int r_max = 0;
};

/// Runs symdiff_profile for every generator and classifies A's size at
/// scale. r_max < 0 picks a default wide enough for all generators.
AlmostStabilityReport classify_almost_stable(const GroupPtr& oracle,
                                             const SubsetSpec& A,
                                             int r_max = -1,
                                             std::size_t cap = kDefaultElementCap);

/// Alternating-annulus partition of a locally finite chain group: one-point
/// coset transversals A_n inside each annulus G_{n+1} \ G_n certify
/// A_n . G_n = G_{n+1} \ G_n, and A takes level 0 plus the odd levels,
/// B the even levels >= 2. Every translate A.x meets B in a set bounded
/// independently of the truncation.
struct StablePartition {
  SubsetSpec A, B;
  int depth = 0;
  /// transversals[n] = A_n, one point per coset x.G_n in G_{n+1} \ G_n.
  std::vector<std::vector<Element>> transversals;
  std::vector<std::size_t> level_sizes;  // |G_n| for n = 0..depth
  std::vector<std::size_t> a_sizes;      // |A ∩ G_n|
  std::vector<std::size_t> b_sizes;      // |B ∩ G_n|
};

/// Requires a chain of depth >= 4. Construction is verified: one-point coset
/// intersections, exact annulus reconstruction, and the partition of every
/// level; throws std::logic_error if any check fails.
StablePartition stable_partition_locally_finite(const GroupPtr& oracle,
                                                int depth = -1);

}  // namespace gz
