#include "groupzero/cayley.hpp"

#include <algorithm>
#include <stdexcept>

namespace gz {

std::span<const Element> Ball::layer(int k) const {
  if (k < 0 || k > radius_) return {};
  std::uint32_t lo = layer_offsets_[k];
  std::uint32_t hi = layer_offsets_[k + 1];
  return std::span<const Element>(elements_.data() + lo, hi - lo);
}

std::size_t Ball::layer_size(int k) const { return layer(k).size(); }

const std::vector<std::int32_t>& Ball::adjacency(
    const GroupOracle& oracle) const {
  if (!adjacency_.empty() || elements_.empty()) return adjacency_;
  const auto& gens = oracle.generators();
  adjacency_.assign(elements_.size() * gens.size(), -1);
  for (std::uint32_t id = 0; id < elements_.size(); ++id) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Element nb = oracle.mul(elements_[id], gens[gi]);
      auto it = index_.find(nb);
      if (it != index_.end())
        adjacency_[id * gens.size() + gi] = static_cast<std::int32_t>(it->second);
    }
  }
  return adjacency_;
}

struct BallBuilder {
  static PartialBall build(const GroupOracle& oracle, int radius,
                           std::size_t cap, bool throw_on_cap) {
    if (radius < 0) throw PreconditionError("ball radius must be >= 0");
    PartialBall out;
    Ball& b = out.ball;
    out.requested = radius;
    out.truncated = false;
    out.projected = 0;
    b.degree_ = oracle.generators().size();

    b.elements_.push_back(oracle.identity());
    b.wordlen_.push_back(0);
    b.index_.emplace(oracle.identity(), 0u);
    b.layer_offsets_ = {0u, 1u};
    b.radius_ = 0;

    std::uint32_t lo = 0, hi = 1;
    for (int k = 1; k <= radius; ++k) {
      // projected size if the next layer matches the branching of this one
      std::size_t frontier = hi - lo;
      std::size_t projected = b.elements_.size() + frontier * b.degree_;
      if (frontier > 0 && projected > cap) {
        // conservative projection; try the layer only if the hard bound fits
        if (b.elements_.size() + frontier > cap) {
          if (throw_on_cap)
            throw ResourceCapError(
                "ball(" + oracle.name() + ", " + std::to_string(radius) +
                    ") would exceed the element cap of " + std::to_string(cap),
                projected);
          out.truncated = true;
          out.projected = projected;
          return out;
        }
      }
      std::size_t before = b.elements_.size();
      for (std::uint32_t id = lo; id < hi; ++id) {
        for (const Element& s : oracle.generators()) {
          Element nb = oracle.mul(b.elements_[id], s);
          auto [it, fresh] =
              b.index_.emplace(nb, static_cast<std::uint32_t>(b.elements_.size()));
          if (fresh) {
            b.elements_.push_back(std::move(nb));
            b.wordlen_.push_back(static_cast<std::uint16_t>(k));
            if (b.elements_.size() > cap) {
              // roll back to the last complete layer
              for (std::size_t i = b.elements_.size(); i-- > before;)
                b.index_.erase(b.elements_[i]);
              b.elements_.resize(before);
              b.wordlen_.resize(before);
              if (throw_on_cap)
                throw ResourceCapError(
                    "ball(" + oracle.name() + ", " + std::to_string(radius) +
                        ") exceeds the element cap of " + std::to_string(cap),
                    projected);
              out.truncated = true;
              out.projected = projected;
              return out;
            }
          }
        }
      }
      b.layer_offsets_.push_back(static_cast<std::uint32_t>(b.elements_.size()));
      b.radius_ = k;
      if (b.elements_.size() == before && b.saturation_radius_ < 0)
        b.saturation_radius_ = k;
      lo = static_cast<std::uint32_t>(before);
      hi = static_cast<std::uint32_t>(b.elements_.size());
      if (lo == hi) {
        // group exhausted; remaining layers are empty
        for (int kk = k + 1; kk <= radius; ++kk)
          b.layer_offsets_.push_back(hi);
        b.radius_ = radius;
        break;
      }
    }
    return out;
  }
};

Ball ball(const GroupOracle& oracle, int radius, std::size_t cap) {
  return BallBuilder::build(oracle, radius, cap, /*throw_on_cap=*/true).ball;
}

PartialBall ball_up_to(const GroupOracle& oracle, int radius,
                       std::size_t cap) {
  return BallBuilder::build(oracle, radius, cap, /*throw_on_cap=*/false);
}

AnnulusComponents components_outside(const GroupOracle& oracle, const Ball& b,
                                     int r_inner, int r_outer) {
  if (r_inner < 0 || r_inner >= r_outer)
    throw PreconditionError("components_outside requires 0 <= r_inner < r_outer");
  if (r_outer > b.radius())
    throw PreconditionError("ball radius too small for the requested annulus");

  AnnulusComponents out;
  out.r_inner = r_inner;
  out.r_outer = r_outer;

  const auto& adj = b.adjacency(oracle);
  const std::size_t deg = b.degree();
  auto in_annulus = [&](std::uint32_t id) {
    int w = b.wordlen(id);
    return w > r_inner && w <= r_outer;
  };

  std::vector<std::uint8_t> visited(b.size(), 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < b.size(); ++start) {
    if (visited[start] || !in_annulus(start)) continue;
    AnnulusComponent comp;
    stack.push_back(start);
    visited[start] = 1;
    while (!stack.empty()) {
      std::uint32_t id = stack.back();
      stack.pop_back();
      comp.ids.push_back(id);
      if (b.wordlen(id) == r_outer) comp.touches_outer = true;
      for (std::size_t gi = 0; gi < deg; ++gi) {
        std::int32_t nb = adj[id * deg + gi];
        if (nb < 0) continue;
        auto nid = static_cast<std::uint32_t>(nb);
        if (!visited[nid] && in_annulus(nid)) {
          visited[nid] = 1;
          stack.push_back(nid);
        }
      }
    }
    std::sort(comp.ids.begin(), comp.ids.end());
    out.components.push_back(std::move(comp));
  }
  return out;
}

AnnulusComponents components_outside(const GroupOracle& oracle, int r_inner,
                                     int r_outer, std::size_t cap) {
  Ball b = ball(oracle, r_outer, cap);
  return components_outside(oracle, b, r_inner, r_outer);
}

}  // namespace gz
