#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupzero/cayley.hpp"
#include "groupzero/group.hpp"
#include "groupzero/stability.hpp"
#include "groupzero/subset.hpp"

namespace gz {

enum class WitnessSide { Right, Left };

std::string to_string(WitnessSide s);

/// Verified pair (finite set I, element x) with I.x inside B (Right) or
/// x.I inside B (Left), I inside A.
struct WitnessCertificate {
  std::vector<Element> I;
  Element x;
  WitnessSide side = WitnessSide::Right;

  std::size_t size() const { return I.size(); }
};

/// Exhaustive re-verification; returns the number of violations (0 expected).
std::size_t verify_certificate(const GroupOracle& oracle,
                               const WitnessCertificate& cert,
                               const SubsetSpec& A, const SubsetSpec& B);

struct WitnessSearchResult {
  std::optional<WitnessCertificate> certificate;  // nullopt = NotFoundAtScale
  int radius = 0;
  std::size_t threshold_m = 0;
  std::size_t candidates_tried = 0;
};

/// Exhaustive search over x in Ball(r), ordered by word length then
/// canonical order; I = { a in A ∩ Ball(r) : a.x in B } (Right) or
/// { a : x.a in B } (Left); first x with |I| >= m wins. Requires A, B
/// disjoint on the ball.
WitnessSearchResult witness_search(const GroupPtr& oracle, const SubsetSpec& A,
                                   const SubsetSpec& B, int r, std::size_t m,
                                   WitnessSide side = WitnessSide::Right,
                                   std::size_t cap = kDefaultElementCap);

/// Branch taken by the constructive infinite-cyclic-subgroup procedure.
enum class CyclicBranch {
  TailPositive,   // J+ already large, x = z
  TailNegative,   // J- already large, x = z^-1
  EscapeCosets,   // points a, b escape J.Z; I = a.Z ∩ A, x = b.a^-1 (Left)
  PigeonholeA,    // A covered by J.Z; largest A ∩ j.Z wins (Left)
  PigeonholeB,    // B covered by J.Z; I = a.b^-1.(B ∩ b.Z) (Left)
  Unresolved,     // ball too small to separate the cases
};

std::string to_string(CyclicBranch b);

struct CyclicWitnessReport {
  CyclicBranch branch = CyclicBranch::Unresolved;
  std::optional<WitnessCertificate> certificate;
  std::size_t j_plus_size = 0;
  std::size_t j_minus_size = 0;
  std::optional<Element> base_a, base_b;  // escape/pigeonhole anchors
  std::string detail;
};

/// Case analysis at scale: tail sets J+, J- first; otherwise escape the
/// orbit union J.Z with a left certificate x.I = b.Z; otherwise pigeonhole
/// the covered side. Requires z of infinite order (checked at scale) and
/// A ⊔ B partitioning Ball(r).
CyclicWitnessReport witness_via_cyclic(const GroupPtr& oracle, const Element& z,
                                       const SubsetSpec& A, const SubsetSpec& B,
                                       int r, std::size_t m,
                                       std::size_t cap = kDefaultElementCap);

struct PartitionInstance {
  std::string name;
  SubsetSpec A, B;
};

struct PartitionFinding {
  std::string name;
  bool valid_instance = false;
  std::string invalid_reason;
  std::optional<WitnessCertificate> right, left;
  /// Certificate for the same x strictly larger at the full radius than at
  /// half radius — the finite stand-in for "infinite I".
  bool scale_robust = false;
  std::size_t size_at_half = 0, size_at_full = 0;
  /// Chain oracles: true when every tested translate's intersection count
  /// stabilized below the truncation (the bounded-certificate evidence).
  bool chain_bounded_evidence = false;
  std::size_t chain_max_bound = 0;
  bool almost_stable_A = false;
  SizeClass size_class_A = SizeClass::Proper;
  bool inconsistent = false;
  std::string reason;
};

struct ConsistencyReport {
  std::vector<PartitionFinding> findings;
  std::size_t inconsistent_count = 0;
  std::size_t valid_count = 0;
  std::vector<std::string> caveats;
};

/// Cross-checks witness searches against almost-stability per partition and
/// against the oracle's declared flexibility class. INCONSISTENT when a
/// Flexible-labeled oracle misses a scale-robust certificate on a valid
/// partition, when a certificate fails re-verification, or when an
/// almost-stable proper subset produces a scale-growing certificate.
ConsistencyReport flexibility_consistency(
    const GroupPtr& oracle, const std::vector<PartitionInstance>& partitions,
    int r, std::size_t m, std::size_t cap = kDefaultElementCap);

}  // namespace gz
