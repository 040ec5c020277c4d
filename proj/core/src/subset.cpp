#include "groupzero/subset.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <set>

#include "groupzero/cayley.hpp"
#include "groupzero/ends.hpp"
#include "groupzero/stability.hpp"

namespace gz {

std::string to_string(SubsetTag t) {
  switch (t) {
    case SubsetTag::FiniteList: return "FiniteList";
    case SubsetTag::CofiniteComplement: return "CofiniteComplement";
    case SubsetTag::Ray: return "Ray";
    case SubsetTag::AnnulusParity: return "AnnulusParity";
    case SubsetTag::WordLength: return "WordLength";
    case SubsetTag::ParityClass: return "ParityClass";
    default: return "Custom";
  }
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void require_zn(const GroupPtr& oracle, const char* what) {
  const std::string& n = oracle->name();
  if (n != "Z" && n.rfind("Z^", 0) != 0)
    throw PreconditionError(std::string(what) + " requires Z or Z^n, got " +
                            n);
}

// splits "a,b,(1,2),c" at commas outside parentheses
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string strip_space(std::string_view s) {
  std::string out;
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

namespace subsets {

SubsetSpec finite_list(const GroupPtr& oracle, std::vector<Element> elems) {
  auto set = std::make_shared<std::set<Element>>(elems.begin(), elems.end());
  std::string name = "finite[" + std::to_string(set->size()) + "]";
  (void)oracle;
  return SubsetSpec{name, SubsetTag::FiniteList,
                    [set](const Element& g) { return set->count(g) > 0; }};
}

SubsetSpec cofinite_complement(const GroupPtr& oracle,
                               std::vector<Element> removed) {
  auto set = std::make_shared<std::set<Element>>(removed.begin(), removed.end());
  std::string name = "cofinite[" + std::to_string(set->size()) + "]";
  (void)oracle;
  return SubsetSpec{name, SubsetTag::CofiniteComplement,
                    [set](const Element& g) { return set->count(g) == 0; }};
}

SubsetSpec complement(const SubsetSpec& s) {
  SubsetTag tag = SubsetTag::Custom;
  if (s.tag == SubsetTag::FiniteList) tag = SubsetTag::CofiniteComplement;
  if (s.tag == SubsetTag::CofiniteComplement) tag = SubsetTag::FiniteList;
  if (s.tag == SubsetTag::AnnulusParity) tag = SubsetTag::AnnulusParity;
  if (s.tag == SubsetTag::ParityClass) tag = SubsetTag::ParityClass;
  auto inner = s.member;
  return SubsetSpec{"complement(" + s.name + ")", tag,
                    [inner](const Element& g) { return !inner(g); }};
}

SubsetSpec naturals(const GroupPtr& oracle) {
  if (oracle->name() != "Z")
    throw PreconditionError("the `nat` subset lives in Z, got " +
                            oracle->name());
  return SubsetSpec{"nat", SubsetTag::Ray,
                    [](const Element& g) { return g[0] >= 0; }};
}

SubsetSpec parity_class(const GroupPtr& oracle, int parity) {
  require_zn(oracle, "parity class");
  int p = parity & 1;
  return SubsetSpec{p == 0 ? "even" : "odd", SubsetTag::ParityClass,
                    [p](const Element& g) {
                      std::int64_t s = 0;
                      for (std::size_t i = 0; i < g.size(); ++i) s += g[i];
                      return ((s % 2) + 2) % 2 == p;
                    }};
}

SubsetSpec halfspace(const GroupPtr& oracle, std::int64_t bound) {
  require_zn(oracle, "halfspace");
  return SubsetSpec{"halfplane:m>=" + std::to_string(bound), SubsetTag::Custom,
                    [bound](const Element& g) { return g[0] >= bound; }};
}

SubsetSpec wordlen_at_most(const GroupPtr& oracle, int bound) {
  auto b = std::make_shared<Ball>(ball(*oracle, bound));
  return SubsetSpec{"wl<=" + std::to_string(bound), SubsetTag::WordLength,
                    [b](const Element& g) { return b->contains(g); }};
}

SubsetSpec hash_side(const GroupPtr& oracle, std::uint64_t seed) {
  (void)oracle;
  return SubsetSpec{"hash:" + std::to_string(seed), SubsetTag::Custom,
                    [seed](const Element& g) {
                      return (mix64(seed ^ g.hash()) & 1ull) == 1ull;
                    }};
}

SubsetSpec annulus_parity(const GroupPtr& oracle, int parity) {
  if (!oracle->has_chain())
    throw PreconditionError("annulus parity requires a chain oracle");
  int p = parity & 1;
  GroupPtr o = oracle;
  return SubsetSpec{"annulus-parity:" + std::to_string(p),
                    SubsetTag::AnnulusParity, [o, p](const Element& g) {
                      int lev = o->chain_level(g);
                      if (lev == 0) return p == 1;
                      return lev % 2 == p;
                    }};
}

SubsetSpec seeded_annulus_side(const GroupPtr& oracle, std::uint64_t seed) {
  if (!oracle->has_chain())
    throw PreconditionError("annulus partition requires a chain oracle");
  GroupPtr o = oracle;
  return SubsetSpec{"annulus:" + std::to_string(seed),
                    SubsetTag::AnnulusParity, [o, seed](const Element& g) {
                      int lev = o->chain_level(g);
                      return (mix64(seed ^ static_cast<std::uint64_t>(lev)) &
                              1ull) == 1ull;
                    }};
}

}  // namespace subsets

SubsetSpec parse_subset_literal(std::string_view literal,
                                const GroupPtr& oracle) {
  std::string s = strip_space(literal);
  if (s.empty()) throw ParseError("empty subset literal");
  if (s == "nat") return subsets::naturals(oracle);
  if (s == "even") return subsets::parity_class(oracle, 0);
  if (s == "odd") return subsets::parity_class(oracle, 1);
  if (s == "prop10")
    return stable_partition_locally_finite(oracle).A;
  if (s == "end:+")
    return end_descriptor(oracle, EndSide::Positive).as_subset();
  if (s == "end:-")
    return end_descriptor(oracle, EndSide::Negative).as_subset();
  if (s.rfind("halfplane:m>=", 0) == 0) {
    std::string rest = s.substr(13);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || p != rest.data() + rest.size())
      throw ParseError("bad halfplane bound in '" + s + "'");
    return subsets::halfspace(oracle, v);
  }
  if (s.rfind("wl<=", 0) == 0) {
    std::string rest = s.substr(4);
    int v = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || p != rest.data() + rest.size() || v < 0)
      throw ParseError("bad word-length bound in '" + s + "'");
    return subsets::wordlen_at_most(oracle, v);
  }
  if (s.rfind("hash:", 0) == 0) {
    std::uint64_t seed = 0;
    std::string rest = s.substr(5);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
    if (ec != std::errc() || p != rest.data() + rest.size())
      throw ParseError("bad seed in '" + s + "'");
    return subsets::hash_side(oracle, seed);
  }
  if (s.rfind("annulus:", 0) == 0) {
    std::uint64_t seed = 0;
    std::string rest = s.substr(8);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
    if (ec != std::errc() || p != rest.data() + rest.size())
      throw ParseError("bad seed in '" + s + "'");
    return subsets::seeded_annulus_side(oracle, seed);
  }
  if (s.rfind("complement:", 0) == 0)
    return subsets::complement(parse_subset_literal(s.substr(11), oracle));
  auto parse_list = [&](std::string_view body) {
    std::vector<Element> elems;
    std::string b = strip_space(body);
    if (b.size() < 2 || b.front() != '[' || b.back() != ']')
      throw ParseError("expected [e1,e2,...] in '" + s + "'");
    std::string inner = b.substr(1, b.size() - 2);
    if (!strip_space(inner).empty())
      for (const std::string& tok : split_top_level(inner))
        elems.push_back(oracle->parse(strip_space(tok)));
    return elems;
  };
  if (s.rfind("finite:", 0) == 0)
    return subsets::finite_list(oracle, parse_list(s.substr(7)));
  if (s.rfind("cofinite:", 0) == 0)
    return subsets::cofinite_complement(oracle, parse_list(s.substr(9)));
  throw ParseError("unknown subset literal '" + s + "'");
}

}  // namespace gz
