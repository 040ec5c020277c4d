#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupzero/element.hpp"

namespace gz {

/// Label carried by catalog entries and used by consistency reports only;
/// it never influences a computation.
enum class FlexibilityClass { Flexible, Stable, Unknown };

std::string to_string(FlexibilityClass c);

/// A finitely described group: identity, total multiplication and inversion
/// on canonical forms, a finite symmetric generating set, an element grammar,
/// and optionally a chain of finite subgroups (locally finite entries) or a
/// virtually cyclic decomposition (axis of infinite order plus a finite right
/// transversal).
///
/// Oracles are immutable after construction; all operations are pure.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  const std::string& name() const { return name_; }
  const Element& identity() const { return identity_; }

  /// Closed under inversion. Parallel to generator_names().
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const {
    return generator_names_;
  }

  virtual Element mul(const Element& g, const Element& h) const = 0;
  virtual Element inv(const Element& g) const = 0;

  /// g^k by square-and-multiply; |k| capped to keep canonical forms sane.
  Element power(const Element& g, std::int64_t k) const;

  /// Grammar: `e`, a word `name[^int]` joined by `*`, or a group-specific
  /// literal (integer for Z and C_m, tuple for Z^n and Z x C_m, cycles for
  /// the symmetric entries).
  Element parse(std::string_view expr) const;
  virtual std::string format(const Element& g) const = 0;

  FlexibilityClass flexibility_class() const { return flex_; }
  bool is_finite() const { return finite_; }

  // --- chain of finite subgroups (locally finite entries only) ---

  bool has_chain() const { return chain_depth_ >= 0; }
  /// Declared depth: levels 0..chain_depth() carry the documented contract;
  /// chain_level/chain_members also answer above it when representable.
  int chain_depth() const { return chain_depth_; }
  /// Least n with g in level n. Throws PreconditionError when no chain.
  virtual int chain_level(const Element& g) const;
  /// Explicit element list of level n. Throws when the level is not
  /// materializable under the element cap.
  virtual std::vector<Element> chain_members(int level) const;
  /// Largest level chain_members can materialize; -1 when no chain.
  virtual int chain_materialization_cap() const { return -1; }

  // --- virtually cyclic structure (Z, Dinf, Z x C_m) ---

  bool is_virtually_cyclic() const { return virtually_cyclic_; }
  /// Axis element z of infinite order.
  virtual Element axis() const;
  /// Finite right transversal T with G = <z> . T; index 0 is the identity.
  virtual std::vector<Element> axis_transversal() const;
  /// Writes g = z^k . t and returns (k, index of t in axis_transversal()).
  /// Exact for the virtually cyclic entries; nullopt otherwise.
  virtual std::optional<std::pair<std::int64_t, int>> axis_decompose(
      const Element& g) const;

 protected:
  /// Group-specific literal (non-word) syntax; default rejects.
  virtual Element parse_literal(std::string_view expr) const;

  std::string name_;
  Element identity_;
  std::vector<Element> generators_;
  std::vector<std::string> generator_names_;
  FlexibilityClass flex_ = FlexibilityClass::Unknown;
  bool finite_ = false;
  int chain_depth_ = -1;
  bool virtually_cyclic_ = false;
};

using GroupPtr = std::shared_ptr<const GroupOracle>;

struct GroupOptions {
  /// Declared chain depth for locally finite entries.
  int chain_depth = 8;
  /// Generator count for the direct-sum entry (independent of chain depth so
  /// stability windows have headroom above the declared levels).
  int dirsum_generators = 12;
  /// Generators t_i = (i, i+1) for the finitary symmetric entry.
  int finsym_generators = 8;
};

/// Catalog factory. Accepted spec strings: `Z`, `Z^n` (n >= 2), `Fk`
/// (2 <= k <= 7), `Dinf`, `ZxCm` (m >= 2), `DirSumC2`, `FinSym`, `Cm`,
/// `Symn` (2 <= n <= 8). Throws ParseError on anything else.
GroupPtr make_group(std::string_view spec, const GroupOptions& opts = {});

/// Names accepted by make_group with default options, for help text.
std::vector<std::string> catalog_names();

/// Deterministic sample of elements: random generator words of length at
/// most max_len, seeded. Duplicates removed, identity always included.
std::vector<Element> sample_elements(const GroupOracle& oracle,
                                     std::size_t count, int max_len,
                                     std::uint64_t seed);

/// True when no power z^j with 1 <= j <= bound hits the identity.
bool has_infinite_order_at_scale(const GroupOracle& oracle, const Element& z,
                                 int bound = 64);

}  // namespace gz
