#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupzero/cayley.hpp"
#include "groupzero/ends.hpp"
#include "groupzero/group.hpp"
#include "groupzero/subset.hpp"

namespace gz {

/// Truncation-bounded check outcome: Proven carries a reusable witness,
/// RefutedAtScale a concrete counterexample checkable independently,
/// UnknownAtScale is returned (never guessed) when a bounded search finds
/// neither.
enum class TopoStatus { Proven, RefutedAtScale, UnknownAtScale };

std::string to_string(TopoStatus s);

struct TopoVerdict {
  TopoStatus status = TopoStatus::UnknownAtScale;
  int scale = 0;
  std::string witness;
  std::string counterexample;
  std::string evidence;
};

/// Symbolic neighborhood base family at 0 for the group with adjoined zero;
/// every group point is isolated in every accepted spec.
enum class BaseFamily { Discrete, Cofinite, EndBase, Explicit };

std::string to_string(BaseFamily f);

/// Base elements are subsets of G plus the implicit zero: the Discrete
/// family is {0} alone; Cofinite is all cofinite subsets of G; EndBase is
/// the tail chain K_n of an end descriptor (its two-sided translates
/// g1.K.g2 re-enter through the translation-closure identity checked by
/// check_shift_continuity); Explicit is a finite list (at most 64) of
/// subset bodies checked by bounded search.
struct ZeroTopologySpec {
  GroupPtr oracle;
  BaseFamily family = BaseFamily::Discrete;
  std::optional<EndDescriptor> end;       // EndBase only
  std::vector<SubsetSpec> explicit_base;  // Explicit only; 0 implicit
  std::string label;
};

ZeroTopologySpec discrete_topology(const GroupPtr& oracle);
ZeroTopologySpec cofinite_topology(const GroupPtr& oracle);
/// End-tail base on a virtually cyclic entry; the construction used by the
/// census and the bundle checks.
ZeroTopologySpec end_base_topology(const GroupPtr& oracle, EndSide side);
ZeroTopologySpec explicit_topology(const GroupPtr& oracle,
                                   std::vector<SubsetSpec> base,
                                   std::string label);

/// Parses `discrete | cofinite | end:+ | end:- | explicit:<file>`.
ZeroTopologySpec parse_topology_spec(std::string_view spec,
                                     const GroupPtr& oracle);

/// For any two base elements U, V some base element W refines U ∩ V.
TopoVerdict filter_base_check(const ZeroTopologySpec& spec, int R);

/// Every g in Ball(R) is excluded by some base element (group points are
/// isolated by construction, so only 0-vs-g separation is checked).
TopoVerdict is_hausdorff(const ZeroTopologySpec& spec, int R);

/// With G discrete, G with zero is compact iff every neighborhood of 0 is
/// cofinite; decided symbolically where the family allows, by bounded
/// complement growth otherwise.
TopoVerdict is_compact(const ZeroTopologySpec& spec, int R = 30);

/// Some base element U0 has finite difference U0 \ V against every base
/// element V.
TopoVerdict is_locally_compact(const ZeroTopologySpec& spec, int R);

/// Body of the local-compactness witness U0, for the almost-stability
/// bridge; nullopt when not locally compact at scale.
std::optional<SubsetSpec> locally_compact_witness(const ZeroTopologySpec& spec,
                                                  int R);

/// For each generator g and base element U there is a base element V with
/// g.(V\{0}) and (V\{0}).g inside U. For the symbolic families this is the
/// translation-closure identity; for Explicit it is a bounded search and a
/// failing (g, U) refutes.
TopoVerdict check_shift_continuity(const ZeroTopologySpec& spec, int R);

/// Joint continuity at (0,0) and at (g,0), (0,g): base V, W with
/// (V\{0}).(W\{0}) inside U. Requires shift continuity Proven.
TopoVerdict check_semigroup_continuity(const ZeroTopologySpec& spec, int R);

/// True when some base element is {0} at scale (0 isolated).
bool zero_isolated(const ZeroTopologySpec& spec, int R);

enum class DichotomyClass { Discrete, Compact, Neither };

std::string to_string(DichotomyClass c);

struct DichotomyResult {
  DichotomyClass cls = DichotomyClass::Neither;
  /// VIOLATION when a Flexible-labeled oracle lands on Neither.
  bool consistent = true;
  std::string note;
};

/// Requires Hausdorff, shift continuity and local compactness Proven at R;
/// throws PreconditionError otherwise.
DichotomyResult classify_dichotomy(const ZeroTopologySpec& spec, int R);

struct VerdictBundle {
  TopoVerdict filter_base, hausdorff, shift_continuity, locally_compact,
      compact;
  bool not_discrete = false;
};

VerdictBundle full_bundle(const ZeroTopologySpec& spec, int R);

/// 0.g = g.0 = 0.0 = 0 over Ball(R), exercised through the adjoined-zero
/// multiplication.
TopoVerdict zero_ideal_check(const GroupPtr& oracle, int R);

struct CensusEntry {
  std::string label;
  VerdictBundle bundle;
  DichotomyClass classification = DichotomyClass::Neither;
  bool consistent = true;
  TopoVerdict semigroup;
};

struct ZeroTopologyCensus {
  std::vector<CensusEntry> entries;  // discrete, cofinite, end:+, end:-
  bool all_distinct = false;
  std::vector<std::string> distinctness_witnesses;
  std::size_t semigroup_count = 0;
  std::vector<std::string> caveats;
  int scale = 0;
};

/// The four shift-continuous locally compact candidates on Z with zero:
/// discrete, cofinite, and the two end-tail topologies. Verifies the full
/// bundle for each, pairwise distinctness, the classification vector and
/// the semigroup count; exhaustiveness of the list itself is flagged as
/// scale-limited evidence.
ZeroTopologyCensus zero_topology_census_on_Z(int R = 20,
                                             std::size_t cap = kDefaultElementCap);

}  // namespace gz
