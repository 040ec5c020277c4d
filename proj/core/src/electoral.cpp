#include "groupzero/electoral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gz {

std::string to_string(WitnessSide s) {
  return s == WitnessSide::Right ? "Right" : "Left";
}

std::string to_string(CyclicBranch b) {
  switch (b) {
    case CyclicBranch::TailPositive: return "tail+";
    case CyclicBranch::TailNegative: return "tail-";
    case CyclicBranch::EscapeCosets: return "escape-cosets";
    case CyclicBranch::PigeonholeA: return "pigeonhole-A";
    case CyclicBranch::PigeonholeB: return "pigeonhole-B";
    default: return "unresolved";
  }
}

std::size_t verify_certificate(const GroupOracle& oracle,
                               const WitnessCertificate& cert,
                               const SubsetSpec& A, const SubsetSpec& B) {
  std::size_t bad = 0;
  for (const Element& a : cert.I) {
    if (!A.contains(a)) ++bad;
    Element t = cert.side == WitnessSide::Right ? oracle.mul(a, cert.x)
                                                : oracle.mul(cert.x, a);
    if (!B.contains(t)) ++bad;
  }
  return bad;
}

namespace {

// ball elements sorted by (wordlen, canonical order)
std::vector<std::uint32_t> sorted_ids(const Ball& b) {
  std::vector<std::uint32_t> ids(b.size());
  for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](std::uint32_t p, std::uint32_t q) {
    if (b.wordlen(p) != b.wordlen(q)) return b.wordlen(p) < b.wordlen(q);
    return b.element(p) < b.element(q);
  });
  return ids;
}

void check_disjoint_on_ball(const Ball& b, const SubsetSpec& A,
                            const SubsetSpec& B, const GroupOracle& oracle) {
  for (const Element& g : b.elements())
    if (A.contains(g) && B.contains(g))
      throw PreconditionError("A and B are not disjoint on the ball: " +
                              oracle.format(g) + " lies in both");
}

WitnessCertificate make_verified(const GroupOracle& oracle,
                                 std::vector<Element> I, Element x,
                                 WitnessSide side, const SubsetSpec& A,
                                 const SubsetSpec& B) {
  WitnessCertificate cert{std::move(I), std::move(x), side};
  if (verify_certificate(oracle, cert, A, B) != 0)
    throw std::logic_error("certificate failed construction-time verification");
  return cert;
}

WitnessSearchResult witness_search_on_ball(const GroupPtr& oracle,
                                           const Ball& b, const SubsetSpec& A,
                                           const SubsetSpec& B, int r,
                                           std::size_t m, WitnessSide side) {
  if (m < 1) throw PreconditionError("witness threshold m must be >= 1");
  check_disjoint_on_ball(b, A, B, *oracle);

  WitnessSearchResult res;
  res.radius = r;
  res.threshold_m = m;

  std::vector<Element> members;
  for (std::uint32_t id : sorted_ids(b))
    if (A.contains(b.element(id))) members.push_back(b.element(id));

  for (std::uint32_t id : sorted_ids(b)) {
    const Element& x = b.element(id);
    ++res.candidates_tried;
    std::vector<Element> I;
    for (const Element& a : members) {
      Element t = side == WitnessSide::Right ? oracle->mul(a, x)
                                             : oracle->mul(x, a);
      if (B.contains(t)) I.push_back(a);
    }
    if (I.size() >= m) {
      res.certificate =
          make_verified(*oracle, std::move(I), x, side, A, B);
      return res;
    }
  }
  return res;
}

}  // namespace

WitnessSearchResult witness_search(const GroupPtr& oracle, const SubsetSpec& A,
                                   const SubsetSpec& B, int r, std::size_t m,
                                   WitnessSide side, std::size_t cap) {
  Ball b = ball(*oracle, r, cap);
  return witness_search_on_ball(oracle, b, A, B, r, m, side);
}

CyclicWitnessReport witness_via_cyclic(const GroupPtr& oracle, const Element& z,
                                       const SubsetSpec& A, const SubsetSpec& B,
                                       int r, std::size_t m, std::size_t cap) {
  if (!has_infinite_order_at_scale(*oracle, z))
    throw PreconditionError("z = " + oracle->format(z) +
                            " has finite order at scale");
  Ball b = ball(*oracle, r, cap);
  for (const Element& g : b.elements())
    if (A.contains(g) == B.contains(g))
      throw PreconditionError("A, B do not partition Ball(r): " +
                              oracle->format(g) +
                              (A.contains(g) ? " lies in both" : " lies in neither"));

  CyclicWitnessReport rep;
  Element zinv = oracle->inv(z);

  std::vector<Element> j_plus, j_minus;
  for (std::uint32_t id : sorted_ids(b)) {
    const Element& a = b.element(id);
    if (!A.contains(a)) continue;
    if (B.contains(oracle->mul(a, z))) j_plus.push_back(a);
    if (B.contains(oracle->mul(a, zinv))) j_minus.push_back(a);
  }
  rep.j_plus_size = j_plus.size();
  rep.j_minus_size = j_minus.size();

  if (j_plus.size() >= m) {
    rep.branch = CyclicBranch::TailPositive;
    rep.certificate =
        make_verified(*oracle, j_plus, z, WitnessSide::Right, A, B);
    rep.detail = "J+ reached the threshold; x = z";
    return rep;
  }
  if (j_minus.size() >= m) {
    rep.branch = CyclicBranch::TailNegative;
    rep.certificate =
        make_verified(*oracle, j_minus, zinv, WitnessSide::Right, A, B);
    rep.detail = "J- reached the threshold; x = z^-1";
    return rep;
  }

  // powers of z wide enough to cover every z-orbit point inside the ball
  int zlen = 1;
  if (auto id = b.find(z)) zlen = std::max(1, b.wordlen(*id));
  const int K = std::min(10'000, 4 * r * zlen + 8);
  std::vector<Element> zpow;  // z^-K .. z^K in order
  {
    Element p = oracle->identity();
    std::vector<Element> pos, neg;
    Element q = oracle->identity();
    for (int k = 1; k <= K; ++k) {
      p = oracle->mul(p, z);
      pos.push_back(p);
      q = oracle->mul(q, zinv);
      neg.push_back(q);
    }
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) zpow.push_back(*it);
    zpow.push_back(oracle->identity());
    for (auto& e : pos) zpow.push_back(e);
  }

  std::unordered_set<Element, ElementHash> orbit_union;  // J.Z ∩ ball
  std::vector<Element> J = j_plus;
  J.insert(J.end(), j_minus.begin(), j_minus.end());
  for (const Element& j : J)
    for (const Element& p : zpow) {
      Element q = oracle->mul(j, p);
      if (b.contains(q)) orbit_union.insert(q);
    }

  std::vector<Element> a_escape, b_escape;
  for (std::uint32_t id : sorted_ids(b)) {
    const Element& g = b.element(id);
    if (orbit_union.count(g)) continue;
    if (A.contains(g)) a_escape.push_back(g);
    else b_escape.push_back(g);
  }

  auto orbit_inside = [&](const Element& base, const SubsetSpec& S) {
    std::set<Element> out;
    for (const Element& p : zpow) {
      Element q = oracle->mul(base, p);
      if (b.contains(q) && S.contains(q)) out.insert(q);
    }
    return out;
  };

  if (!a_escape.empty() && !b_escape.empty()) {
    rep.branch = CyclicBranch::EscapeCosets;
    const Element& a = a_escape.front();
    const Element& bb = b_escape.front();
    rep.base_a = a;
    rep.base_b = bb;
    Element x = oracle->mul(bb, oracle->inv(a));
    std::vector<Element> I;
    for (const Element& p : orbit_inside(a, A))
      if (B.contains(oracle->mul(x, p))) I.push_back(p);
    rep.certificate =
        make_verified(*oracle, std::move(I), x, WitnessSide::Left, A, B);
    rep.detail = "a, b escape J.Z; I = a.Z ∩ A, x = b.a^-1, x.I ⊆ b.Z ⊆ B";
    return rep;
  }

  if (a_escape.empty() && !b_escape.empty()) {
    // A ⊆ J.Z at scale: some coset j.Z carries a large piece of A
    rep.branch = CyclicBranch::PigeonholeA;
    std::set<Element> best;
    Element best_j = oracle->identity();
    bool have = false;
    for (const Element& j : J) {
      auto got = orbit_inside(j, A);
      if (!have || got.size() > best.size() ||
          (got.size() == best.size() && j < best_j)) {
        best = std::move(got);
        best_j = j;
        have = true;
      }
    }
    const Element& bb = b_escape.front();
    rep.base_a = best_j;
    rep.base_b = bb;
    Element x = oracle->mul(bb, oracle->inv(best_j));
    std::vector<Element> I;
    for (const Element& p : best)
      if (B.contains(oracle->mul(x, p))) I.push_back(p);
    rep.certificate =
        make_verified(*oracle, std::move(I), x, WitnessSide::Left, A, B);
    rep.detail = "A ⊆ J.Z at scale; pigeonhole coset " + oracle->format(best_j);
    return rep;
  }

  if (b_escape.empty() && !a_escape.empty()) {
    // B ⊆ J.Z at scale: pull a large piece of B back into A
    rep.branch = CyclicBranch::PigeonholeB;
    std::set<Element> best;
    Element best_j = oracle->identity();
    bool have = false;
    for (const Element& j : J) {
      auto got = orbit_inside(j, B);
      if (!have || got.size() > best.size() ||
          (got.size() == best.size() && j < best_j)) {
        best = std::move(got);
        best_j = j;
        have = true;
      }
    }
    const Element& a = a_escape.front();
    rep.base_a = a;
    rep.base_b = best_j;
    Element shift = oracle->mul(a, oracle->inv(best_j));  // a.b^-1
    Element x = oracle->mul(best_j, oracle->inv(a));      // b.a^-1
    std::vector<Element> I;
    for (const Element& p : best) {
      Element i = oracle->mul(shift, p);
      if (A.contains(i) && B.contains(oracle->mul(x, i))) I.push_back(i);
    }
    rep.certificate =
        make_verified(*oracle, std::move(I), x, WitnessSide::Left, A, B);
    rep.detail = "B ⊆ J.Z at scale; I = a.b^-1.(B ∩ b.Z)";
    return rep;
  }

  rep.branch = CyclicBranch::Unresolved;
  rep.detail = "the ball is covered by J.Z; no escape point at this scale";
  return rep;
}

ConsistencyReport flexibility_consistency(
    const GroupPtr& oracle, const std::vector<PartitionInstance>& partitions,
    int r, std::size_t m, std::size_t cap) {
  ConsistencyReport rep;
  rep.caveats.push_back(
      "flexibility and stability quantify over all partitions of an infinite "
      "group; these runs are sampled evidence at the stated scale, not proofs");

  const bool chain_mode = oracle->has_chain();
  std::optional<Ball> b;
  if (!chain_mode) b.emplace(ball(*oracle, r, cap));

  // chain-mode data
  std::vector<Element> chain_all, chain_xs;
  int depth = 0;
  if (chain_mode) {
    depth = oracle->chain_depth();
    chain_all = oracle->chain_members(depth);
    chain_xs = oracle->chain_members(std::max(2, depth - 2));
  }

  for (const PartitionInstance& inst : partitions) {
    PartitionFinding f;
    f.name = inst.name;

    // validity: both parts must keep growing toward the truncation edge
    std::size_t a_half = 0, a_full = 0, b_half = 0, b_full = 0;
    if (chain_mode) {
      for (const Element& g : chain_all) {
        int lev = oracle->chain_level(g);
        bool ia = inst.A.contains(g);
        if (lev <= depth - 2) (ia ? a_half : b_half)++;
        (ia ? a_full : b_full)++;
      }
    } else {
      for (const Element& g : b->elements()) {
        bool ia = inst.A.contains(g);
        auto id = b->find(g);
        if (static_cast<int>(b->wordlen(*id)) <= r / 2) (ia ? a_half : b_half)++;
        (ia ? a_full : b_full)++;
      }
    }
    f.valid_instance = a_full > a_half && b_full > b_half && a_half > 0 &&
                       b_half > 0;
    if (!f.valid_instance) {
      f.invalid_reason =
          "a part is bounded at scale; not a flexibility instance";
      rep.findings.push_back(std::move(f));
      continue;
    }
    ++rep.valid_count;

    if (chain_mode) {
      // bounded-certificate evidence: every translate's meeting count with
      // the other side stabilizes below the truncation
      f.chain_bounded_evidence = true;
      for (const Element& x : chain_xs) {
        int lx = oracle->chain_level(x);
        std::map<int, std::size_t> right_ct, left_ct;
        for (int R = lx + 1; R <= depth; ++R) right_ct[R] = left_ct[R] = 0;
        for (const Element& a : chain_all) {
          int la = oracle->chain_level(a);
          if (!inst.A.contains(a)) continue;
          bool rhit = inst.B.contains(oracle->mul(a, x));
          bool lhit = inst.B.contains(oracle->mul(x, a));
          for (int R = std::max(la, lx + 1); R <= depth; ++R) {
            if (rhit) right_ct[R]++;
            if (lhit) left_ct[R]++;
          }
        }
        auto stabilized = [&](const std::map<int, std::size_t>& ct) {
          if (ct.empty()) return true;
          auto last = std::prev(ct.end())->second;
          return std::all_of(ct.begin(), ct.end(),
                             [&](auto& kv) { return kv.second == last; });
        };
        if (!stabilized(right_ct) || !stabilized(left_ct)) {
          f.chain_bounded_evidence = false;
        } else if (!right_ct.empty()) {
          f.chain_max_bound =
              std::max(f.chain_max_bound, std::prev(right_ct.end())->second);
        }
      }
      f.scale_robust = !f.chain_bounded_evidence;
    } else {
      auto right =
          witness_search_on_ball(oracle, *b, inst.A, inst.B, r, m,
                                 WitnessSide::Right);
      auto left = witness_search_on_ball(oracle, *b, inst.A, inst.B, r, m,
                                         WitnessSide::Left);
      f.right = right.certificate;
      f.left = left.certificate;
      const std::optional<WitnessCertificate>& main =
          f.right ? f.right : f.left;
      if (main) {
        f.size_at_full = main->size();
        // the same x at half radius: the finite stand-in for "re-findable"
        std::size_t half = 0;
        for (const Element& g : b->elements()) {
          auto id = b->find(g);
          if (static_cast<int>(b->wordlen(*id)) > r / 2) continue;
          if (!inst.A.contains(g)) continue;
          Element t = main->side == WitnessSide::Right
                          ? oracle->mul(g, main->x)
                          : oracle->mul(main->x, g);
          if (inst.B.contains(t)) ++half;
        }
        f.size_at_half = half;
        f.scale_robust = f.size_at_full > f.size_at_half &&
                         f.size_at_full >= m;
        if (verify_certificate(*oracle, *main, inst.A, inst.B) != 0) {
          f.inconsistent = true;
          f.reason = "certificate failed re-verification";
        }
      }
    }

    auto cls = classify_almost_stable(oracle, inst.A,
                                      chain_mode ? -1 : std::max(6, r), cap);
    f.almost_stable_A = cls.almost_stable;
    f.size_class_A = cls.size_class;

    if (!f.inconsistent) {
      if (oracle->flexibility_class() == FlexibilityClass::Flexible &&
          !f.scale_robust) {
        f.inconsistent = true;
        f.reason = "Flexible-labeled oracle without a scale-robust certificate";
      } else if (f.almost_stable_A &&
                 f.size_class_A == SizeClass::Proper && f.scale_robust) {
        f.inconsistent = true;
        f.reason =
            "almost-stable proper subset produced a scale-growing certificate";
      }
    }
    if (f.inconsistent) ++rep.inconsistent_count;
    rep.findings.push_back(std::move(f));
  }
  return rep;
}

}  // namespace gz
