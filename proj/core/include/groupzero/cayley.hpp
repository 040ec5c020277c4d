#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "groupzero/group.hpp"

namespace gz {

/// Default cap on enumerated elements per ball.
inline constexpr std::size_t kDefaultElementCap = 5'000'000;

/// Breadth-first closure of {identity} under right multiplication by the
/// generators, with exact word-length layers. Immutable once built.
class Ball {
 public:
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }

  const Element& element(std::uint32_t id) const { return elements_[id]; }
  std::span<const Element> elements() const { return elements_; }

  /// Exact word length of the element with this id.
  int wordlen(std::uint32_t id) const { return wordlen_[id]; }

  std::optional<std::uint32_t> find(const Element& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Element& g) const { return index_.count(g) > 0; }

  /// Elements of exact word length k, in BFS insertion order.
  std::span<const Element> layer(int k) const;
  std::size_t layer_size(int k) const;

  /// True when some sphere of radius <= radius() is empty (the group was
  /// exhausted); saturation_radius() is the first empty sphere, or -1.
  bool saturated() const { return saturation_radius_ >= 0; }
  int saturation_radius() const { return saturation_radius_; }

  /// Neighbor ids under right multiplication by each generator; -1 when the
  /// neighbor falls outside the ball. Built on first use.
  const std::vector<std::int32_t>& adjacency(const GroupOracle& oracle) const;
  std::size_t degree() const { return degree_; }

 private:
  friend struct BallBuilder;
  std::vector<Element> elements_;
  std::vector<std::uint16_t> wordlen_;
  std::vector<std::uint32_t> layer_offsets_;  // layer k = [off[k], off[k+1])
  std::unordered_map<Element, std::uint32_t, ElementHash> index_;
  mutable std::vector<std::int32_t> adjacency_;
  std::size_t degree_ = 0;
  int radius_ = 0;
  int saturation_radius_ = -1;
};

/// Ball of the given radius. Throws ResourceCapError (with the projected
/// size) when the enumeration would exceed the cap.
Ball ball(const GroupOracle& oracle, int radius,
          std::size_t cap = kDefaultElementCap);

/// Like ball(), but on hitting the cap returns the largest complete ball
/// instead of throwing; `ball.radius()` may be smaller than requested.
struct PartialBall {
  Ball ball;
  int requested;
  bool truncated;
  std::size_t projected;  // projected size that tripped the cap, if truncated
};
PartialBall ball_up_to(const GroupOracle& oracle, int radius,
                       std::size_t cap = kDefaultElementCap);

/// Connected component of an annulus of the Cayley graph.
struct AnnulusComponent {
  std::vector<std::uint32_t> ids;  // ids into the ball
  bool touches_outer = false;      // meets the outermost layer
};

struct AnnulusComponents {
  int r_inner = 0;   // removed: closed ball of this radius
  int r_outer = 0;   // annulus = { g : r_inner < wordlen(g) <= r_outer }
  std::vector<AnnulusComponent> components;

  std::size_t touching_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.touches_outer;
    return n;
  }
};

/// Components of the induced graph on Ball(r_outer) \ Ball(r_inner).
/// "Touches the outermost layer" is the computable stand-in for "unbounded".
AnnulusComponents components_outside(const GroupOracle& oracle,
                                     const Ball& b, int r_inner, int r_outer);
AnnulusComponents components_outside(const GroupOracle& oracle, int r_inner,
                                     int r_outer,
                                     std::size_t cap = kDefaultElementCap);

}  // namespace gz
