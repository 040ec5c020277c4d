#include "groupzero/stability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gz {

std::string to_string(ScaleKind k) {
  return k == ScaleKind::BallScale ? "ball" : "chain";
}

std::string to_string(SizeClass c) {
  switch (c) {
    case SizeClass::FiniteAtScale: return "FiniteAtScale";
    case SizeClass::CofiniteAtScale: return "CofiniteAtScale";
    default: return "Proper";
  }
}

namespace {

// least-squares slope of count against radius
double ls_slope(const std::vector<std::pair<int, std::size_t>>& pts) {
  if (pts.size() < 2) return 0.0;
  double n = static_cast<double>(pts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [r, c] : pts) {
    double x = r, y = static_cast<double>(c);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  return denom == 0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

// Bounded iff the counts are constant over the last three radii that can
// still see new elements (spheres/annuli nonempty); a saturated truncation
// cannot refute boundedness it already exhibited.
bool constant_tail(const std::vector<std::pair<int, std::size_t>>& pts,
                   const std::vector<int>& live_radii) {
  std::vector<std::size_t> tail;
  for (auto it = live_radii.rbegin(); it != live_radii.rend() && tail.size() < 3;
       ++it) {
    for (auto& [r, c] : pts)
      if (r == *it) {
        tail.push_back(c);
        break;
      }
  }
  if (tail.size() < 3) return false;
  return tail[0] == tail[1] && tail[1] == tail[2];
}

struct Truncations {
  ScaleKind scale;
  // per radius: the elements with that exact radius (sphere / annulus)
  std::vector<std::vector<Element>> spheres;
  std::vector<int> live_radii;  // radii whose sphere is nonempty
};

Truncations truncations_for(const GroupPtr& oracle, int r_max,
                            std::size_t cap) {
  Truncations t;
  if (oracle->has_chain()) {
    t.scale = ScaleKind::ChainScale;
    t.spheres.resize(r_max + 1);
    for (const Element& g : oracle->chain_members(r_max)) {
      int lev = oracle->chain_level(g);
      t.spheres[lev].push_back(g);
    }
  } else {
    t.scale = ScaleKind::BallScale;
    PartialBall pb = ball_up_to(*oracle, r_max, cap);
    const Ball& b = pb.ball;
    t.spheres.resize(b.radius() + 1);
    for (int k = 0; k <= b.radius(); ++k) {
      auto layer = b.layer(k);
      t.spheres[k].assign(layer.begin(), layer.end());
    }
  }
  for (int r = 0; r < static_cast<int>(t.spheres.size()); ++r)
    if (!t.spheres[r].empty()) t.live_radii.push_back(r);
  return t;
}

int radius_of(const GroupPtr& oracle, const Element& x, int r_max,
              std::size_t cap) {
  if (oracle->has_chain()) return oracle->chain_level(x);
  PartialBall pb = ball_up_to(*oracle, r_max, cap);
  auto id = pb.ball.find(x);
  if (!id)
    throw PreconditionError("element " + oracle->format(x) +
                            " lies outside Ball(" + std::to_string(r_max) +
                            ")");
  return pb.ball.wordlen(*id);
}

}  // namespace

StabilityProfile symdiff_profile(const GroupPtr& oracle, const SubsetSpec& A,
                                 const Element& x, int r_max,
                                 std::size_t cap) {
  int wx = radius_of(oracle, x, r_max, cap);
  if (r_max < wx + 2)
    throw PreconditionError(
        "symdiff_profile requires r_max >= wordlen(x) + 2; wordlen(" +
        oracle->format(x) + ") = " + std::to_string(wx));

  Truncations t = truncations_for(oracle, r_max, cap);
  int achieved = static_cast<int>(t.spheres.size()) - 1;
  if (achieved < wx + 2)
    throw PreconditionError(
        "element cap truncated the window below wordlen(x) + 2");

  StabilityProfile prof;
  prof.scale = t.scale;
  Element xinv = oracle->inv(x);
  // Membership of translates is decided by the symbolic predicate, so counts
  // are exact everywhere; the reported window still stops wordlen(x) short
  // of the truncation on the ball scale.
  int report_max = t.scale == ScaleKind::BallScale
                       ? r_max - wx
                       : static_cast<int>(t.spheres.size()) - 1;

  std::size_t running = 0;
  std::vector<int> live;
  for (int r = 0; r <= report_max && r < static_cast<int>(t.spheres.size());
       ++r) {
    for (const Element& g : t.spheres[r]) {
      bool in_a = A.contains(g);
      bool in_ax = A.contains(oracle->mul(g, xinv));  // g in A.x
      if (in_a != in_ax) ++running;
    }
    if (!t.spheres[r].empty()) live.push_back(r);
    prof.by_radius.emplace_back(r, running);
  }

  if (constant_tail(prof.by_radius, live)) {
    prof.bounded = true;
    prof.bound = prof.by_radius.back().second;
  } else {
    prof.bounded = false;
    prof.slope = ls_slope(prof.by_radius);
  }
  return prof;
}

AlmostStabilityReport classify_almost_stable(const GroupPtr& oracle,
                                             const SubsetSpec& A, int r_max,
                                             std::size_t cap) {
  AlmostStabilityReport rep;

  // pick a default window wide enough for every generator
  if (oracle->has_chain()) {
    rep.scale = ScaleKind::ChainScale;
    int max_lev = 0;
    for (const Element& g : oracle->generators())
      max_lev = std::max(max_lev, oracle->chain_level(g));
    if (r_max < 0) r_max = max_lev + 4;
    r_max = std::min(r_max, oracle->chain_materialization_cap());
  } else {
    rep.scale = ScaleKind::BallScale;
    if (r_max < 0) r_max = 16;
  }
  rep.r_max = r_max;

  Truncations t = truncations_for(oracle, r_max, cap);

  std::set<Element> seen;
  for (std::size_t gi = 0; gi < oracle->generators().size(); ++gi) {
    const Element& g = oracle->generators()[gi];
    if (!seen.insert(g).second) continue;
    int wg = oracle->has_chain() ? oracle->chain_level(g) : 1;
    if (r_max < wg + 2) {
      rep.unresolved_generators.push_back(oracle->generator_names()[gi]);
      continue;
    }
    rep.per_generator.push_back(GeneratorVerdict{
        oracle->generator_names()[gi],
        symdiff_profile(oracle, A, g, r_max, cap)});
  }
  rep.almost_stable =
      !rep.per_generator.empty() &&
      std::all_of(rep.per_generator.begin(), rep.per_generator.end(),
                  [](const GeneratorVerdict& v) { return v.profile.bounded; });

  // size classification of A at scale
  std::vector<std::pair<int, std::size_t>> a_counts, c_counts;
  std::size_t na = 0, nc = 0;
  for (int r = 0; r < static_cast<int>(t.spheres.size()); ++r) {
    for (const Element& g : t.spheres[r]) (A.contains(g) ? na : nc)++;
    a_counts.emplace_back(r, na);
    c_counts.emplace_back(r, nc);
  }
  bool a_const = constant_tail(a_counts, t.live_radii);
  bool c_const = constant_tail(c_counts, t.live_radii);
  if (a_const && c_const)
    rep.size_class = na <= nc ? SizeClass::FiniteAtScale : SizeClass::CofiniteAtScale;
  else if (a_const)
    rep.size_class = SizeClass::FiniteAtScale;
  else if (c_const)
    rep.size_class = SizeClass::CofiniteAtScale;
  else
    rep.size_class = SizeClass::Proper;
  return rep;
}

StablePartition stable_partition_locally_finite(const GroupPtr& oracle,
                                                int depth) {
  if (!oracle->has_chain())
    throw PreconditionError(oracle->name() + " has no declared subgroup chain");
  if (depth < 0) depth = oracle->chain_depth();
  if (depth < 4)
    throw PreconditionError("the stable partition needs a chain of depth >= 4");

  StablePartition out;
  out.depth = depth;

  GroupPtr o = oracle;
  // A = G_0 plus the odd levels (the annuli G_{2n+1} \ G_{2n}); B = the even
  // levels >= 2. The membership predicate extends past the declared depth.
  out.A = SubsetSpec{"prop10:A", SubsetTag::AnnulusParity,
                     [o](const Element& g) {
                       int lev = o->chain_level(g);
                       return lev == 0 || lev % 2 == 1;
                     }};
  out.B = SubsetSpec{"prop10:B", SubsetTag::AnnulusParity,
                     [o](const Element& g) {
                       int lev = o->chain_level(g);
                       return lev >= 2 && lev % 2 == 0;
                     }};

  std::vector<Element> prev = oracle->chain_members(0);
  out.level_sizes.push_back(prev.size());
  out.a_sizes.push_back(prev.size());  // G_0 lies in A
  out.b_sizes.push_back(0);

  for (int n = 0; n < depth; ++n) {
    std::vector<Element> next = oracle->chain_members(n + 1);
    std::set<Element> lower(prev.begin(), prev.end());

    // annulus D_n and its decomposition into cosets x.G_n
    std::vector<Element> annulus;
    for (const Element& g : next)
      if (!lower.count(g)) annulus.push_back(g);
    if (annulus.empty())
      throw std::logic_error("chain inclusion not strict at level " +
                             std::to_string(n));

    std::map<Element, Element> coset_min;  // representative key -> minimum
    for (const Element& x : annulus) {
      // canonical key: minimum of the coset x.G_n
      Element mn = x;
      for (const Element& h : prev) {
        Element y = oracle->mul(x, h);
        if (y < mn) mn = y;
      }
      auto [it, fresh] = coset_min.emplace(mn, mn);
      (void)it;
      (void)fresh;
    }
    std::vector<Element> transversal;
    transversal.reserve(coset_min.size());
    for (auto& [k, v] : coset_min) transversal.push_back(v);

    // verify: one point per coset and A_n . G_n = D_n exactly
    if (transversal.size() * prev.size() != annulus.size())
      throw std::logic_error("transversal does not tile the annulus at level " +
                             std::to_string(n));
    std::set<Element> rebuilt;
    for (const Element& t : transversal)
      for (const Element& h : prev) rebuilt.insert(oracle->mul(t, h));
    if (rebuilt != std::set<Element>(annulus.begin(), annulus.end()))
      throw std::logic_error("A_n . G_n mismatch at level " + std::to_string(n));

    out.transversals.push_back(std::move(transversal));

    // partition bookkeeping for G_{n+1}
    std::size_t na = 0, nb = 0;
    for (const Element& g : next) {
      bool a = out.A.contains(g), b = out.B.contains(g);
      if (a == b)
        throw std::logic_error("partition violation at level " +
                               std::to_string(n + 1));
      (a ? na : nb)++;
    }
    if (na + nb != next.size())
      throw std::logic_error("partition does not cover level " +
                             std::to_string(n + 1));
    out.level_sizes.push_back(next.size());
    out.a_sizes.push_back(na);
    out.b_sizes.push_back(nb);

    prev = std::move(next);
  }
  return out;
}

}  // namespace gz
