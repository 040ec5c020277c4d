#include "groupzero/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace gz {

std::string to_string(FlexibilityClass c) {
  switch (c) {
    case FlexibilityClass::Flexible: return "Flexible";
    case FlexibilityClass::Stable: return "Stable";
    default: return "Unknown";
  }
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::int64_t parse_int(std::string_view tok, const char* what) {
  std::string t = trim(tok);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size())
    throw ParseError(std::string("expected integer ") + what + ", got '" +
                     t + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t nxt = s.find(sep, pos);
    if (nxt == std::string_view::npos) {
      out.emplace_back(s.substr(pos));
      break;
    }
    out.emplace_back(s.substr(pos, nxt - pos));
    pos = nxt + 1;
  }
  return out;
}

std::vector<std::int64_t> parse_tuple(std::string_view expr, std::size_t arity,
                                      const std::string& group) {
  std::string s = trim(expr);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("expected tuple literal for " + group + ", got '" + s + "'");
  auto parts = split(std::string_view(s).substr(1, s.size() - 2), ',');
  if (parts.size() != arity)
    throw ParseError("tuple arity mismatch for " + group + ": expected " +
                     std::to_string(arity) + ", got " +
                     std::to_string(parts.size()));
  std::vector<std::int64_t> vals;
  vals.reserve(arity);
  for (auto& p : parts) vals.push_back(parse_int(p, "tuple entry"));
  return vals;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// ---- permutation helpers (moved-point-pair canonical form) ----
//
// Slots of a finitary permutation: [p0, s(p0), p1, s(p1), ...] with the
// moved points p0 < p1 < ... ; identity is the empty slot list.

using PermMap = std::map<std::int64_t, std::int64_t>;

PermMap perm_from_slots(const Element& e) {
  PermMap m;
  for (std::size_t i = 0; i + 1 < e.size(); i += 2) m[e[i]] = e[i + 1];
  return m;
}

Element perm_to_element(const PermMap& m) {
  Element::Slots s;
  for (auto& [p, q] : m) {
    if (p == q) continue;
    s.push_back(p);
    s.push_back(q);
  }
  return Element(std::move(s));
}

std::int64_t perm_apply(const PermMap& m, std::int64_t p) {
  auto it = m.find(p);
  return it == m.end() ? p : it->second;
}

// apply a, then b
Element perm_compose(const Element& ea, const Element& eb) {
  PermMap a = perm_from_slots(ea), b = perm_from_slots(eb), out;
  for (auto& [p, q] : a) out[p] = perm_apply(b, q);
  for (auto& [p, q] : b)
    if (!a.count(p)) out[p] = q;
  return perm_to_element(out);
}

Element perm_inverse(const Element& ea) {
  PermMap a = perm_from_slots(ea), out;
  for (auto& [p, q] : a) out[q] = p;
  return perm_to_element(out);
}

std::string perm_format(const Element& e) {
  if (e.size() == 0) return "e";
  PermMap m = perm_from_slots(e);
  std::set<std::int64_t> seen;
  std::ostringstream os;
  for (auto& [p, q] : m) {
    if (seen.count(p)) continue;
    os << '(' << p;
    seen.insert(p);
    for (std::int64_t r = q; r != p; r = perm_apply(m, r)) {
      os << ' ' << r;
      seen.insert(r);
    }
    os << ')';
  }
  return os.str();
}

Element perm_parse_cycles(std::string_view expr, std::int64_t point_cap,
                          const std::string& group) {
  std::string s = trim(expr);
  Element acc;  // identity
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
    if (s[i] != '(')
      throw ParseError("expected cycle '(p q ...)' in " + group +
                       " literal, got '" + s.substr(i) + "'");
    std::size_t close = s.find(')', i);
    if (close == std::string_view::npos)
      throw ParseError("unterminated cycle in '" + s + "'");
    std::istringstream in(s.substr(i + 1, close - i - 1));
    std::vector<std::int64_t> pts;
    std::string tok;
    while (in >> tok) pts.push_back(parse_int(tok, "cycle point"));
    for (std::int64_t p : pts) {
      if (p < 0 || p >= point_cap)
        throw ParseError("cycle point " + std::to_string(p) +
                         " out of range for " + group);
    }
    std::set<std::int64_t> uniq(pts.begin(), pts.end());
    if (uniq.size() != pts.size())
      throw ParseError("repeated point inside one cycle in '" + s + "'");
    PermMap cyc;
    if (pts.size() >= 2)
      for (std::size_t k = 0; k < pts.size(); ++k)
        cyc[pts[k]] = pts[(k + 1) % pts.size()];
    acc = perm_compose(acc, perm_to_element(cyc));
    i = close + 1;
  }
  return acc;
}

constexpr std::int64_t kMaxExponent = 1'000'000;

}  // namespace

// ---------------------------------------------------------------------------
// base class
// ---------------------------------------------------------------------------

Element GroupOracle::power(const Element& g, std::int64_t k) const {
  if (k == 0) return identity_;
  if (std::llabs(k) > kMaxExponent)
    throw PreconditionError("exponent too large: " + std::to_string(k));
  Element base = k > 0 ? g : inv(g);
  std::uint64_t n = static_cast<std::uint64_t>(k > 0 ? k : -k);
  Element acc = identity_, sq = base;
  while (n) {
    if (n & 1) acc = mul(acc, sq);
    n >>= 1;
    if (n) sq = mul(sq, sq);
  }
  return acc;
}

Element GroupOracle::parse(std::string_view expr) const {
  std::string s = trim(expr);
  if (s.empty()) throw ParseError("empty element expression");
  if (s == "e") return identity_;
  char c0 = s[0];
  if (std::isdigit(static_cast<unsigned char>(c0)) || c0 == '-' || c0 == '(')
    return parse_literal(s);
  Element acc = identity_;
  for (const std::string& raw : split(s, '*')) {
    std::string tok = trim(raw);
    if (tok.empty()) throw ParseError("empty factor in '" + s + "'");
    std::string name = tok;
    std::int64_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = trim(tok.substr(0, caret));
      exp = parse_int(tok.substr(caret + 1), "exponent");
    }
    const Element* base = nullptr;
    for (std::size_t i = 0; i < generator_names_.size(); ++i) {
      if (generator_names_[i] == name &&
          generator_names_[i].find('^') == std::string::npos) {
        base = &generators_[i];
        break;
      }
    }
    if (!base)
      throw ParseError("unknown generator '" + name + "' for " + name_);
    acc = mul(acc, power(*base, exp));
  }
  return acc;
}

Element GroupOracle::parse_literal(std::string_view expr) const {
  throw ParseError(name_ + " has no literal element syntax; got '" +
                   std::string(expr) + "'");
}

int GroupOracle::chain_level(const Element&) const {
  throw PreconditionError(name_ + " has no declared subgroup chain");
}

std::vector<Element> GroupOracle::chain_members(int) const {
  throw PreconditionError(name_ + " has no declared subgroup chain");
}

Element GroupOracle::axis() const {
  throw PreconditionError(name_ + " is not a virtually cyclic catalog entry");
}

std::vector<Element> GroupOracle::axis_transversal() const {
  throw PreconditionError(name_ + " is not a virtually cyclic catalog entry");
}

std::optional<std::pair<std::int64_t, int>> GroupOracle::axis_decompose(
    const Element&) const {
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Z^n  (n = 1 is the virtually cyclic Z)
// ---------------------------------------------------------------------------

namespace {

class ZnGroup final : public GroupOracle {
 public:
  explicit ZnGroup(int n) : n_(n) {
    name_ = n == 1 ? "Z" : "Z^" + std::to_string(n);
    identity_ = Element(Element::Slots(n, 0));
    static const char* kNames[] = {"x", "y", "z", "w"};
    for (int i = 0; i < n; ++i) {
      Element::Slots plus(n, 0), minus(n, 0);
      plus[i] = 1;
      minus[i] = -1;
      std::string nm = n == 1 ? "t" : (n <= 4 ? kNames[i] : "g" + std::to_string(i + 1));
      generators_.push_back(Element(std::move(plus)));
      generator_names_.push_back(nm);
      generators_.push_back(Element(std::move(minus)));
      generator_names_.push_back(nm + "^-1");
    }
    flex_ = n >= 2 ? FlexibilityClass::Flexible : FlexibilityClass::Stable;
    virtually_cyclic_ = (n == 1);
  }

  Element mul(const Element& g, const Element& h) const override {
    Element::Slots s(n_);
    for (int i = 0; i < n_; ++i) s[i] = g[i] + h[i];
    return Element(std::move(s));
  }

  Element inv(const Element& g) const override {
    Element::Slots s(n_);
    for (int i = 0; i < n_; ++i) s[i] = -g[i];
    return Element(std::move(s));
  }

  std::string format(const Element& g) const override {
    if (n_ == 1) return std::to_string(g[0]);
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << g[i];
    os << ')';
    return os.str();
  }

  Element axis() const override {
    if (n_ != 1) return GroupOracle::axis();
    return Element::of({1});
  }

  std::vector<Element> axis_transversal() const override {
    if (n_ != 1) return GroupOracle::axis_transversal();
    return {identity_};
  }

  std::optional<std::pair<std::int64_t, int>> axis_decompose(
      const Element& g) const override {
    if (n_ != 1) return std::nullopt;
    return std::make_pair(g[0], 0);
  }

 protected:
  Element parse_literal(std::string_view expr) const override {
    std::string s = trim(expr);
    if (n_ == 1 && s.front() != '(')
      return Element::of({parse_int(s, "element of Z")});
    auto vals = parse_tuple(s, n_, name_);
    return Element(Element::Slots(vals.begin(), vals.end()));
  }

 private:
  int n_;
};

// ---------------------------------------------------------------------------
// free group F_k, 2 <= k <= 7; canonical form = freely reduced word packed
// 4 bits per letter: [length, packed...]. Nibble = ((index+1) << 1) | inv.
// ---------------------------------------------------------------------------

class FreeGroup final : public GroupOracle {
 public:
  explicit FreeGroup(int k) : k_(k) {
    if (k < 2 || k > 7)
      throw ParseError("free group rank must be in 2..7, got " +
                       std::to_string(k));
    name_ = "F" + std::to_string(k);
    identity_ = pack({});
    for (int j = 0; j < k; ++j) {
      std::string nm(1, static_cast<char>('a' + j));
      generators_.push_back(pack({static_cast<std::int8_t>(j + 1)}));
      generator_names_.push_back(nm);
      generators_.push_back(pack({static_cast<std::int8_t>(-(j + 1))}));
      generator_names_.push_back(nm + "^-1");
    }
    flex_ = FlexibilityClass::Flexible;
  }

  static Element pack(const std::vector<std::int8_t>& w) {
    Element::Slots s;
    s.push_back(static_cast<std::int64_t>(w.size()));
    std::uint64_t cur = 0;
    int nib = 0;
    for (std::int8_t L : w) {
      int j = std::abs(L) - 1;
      std::uint64_t nibble =
          (static_cast<std::uint64_t>(j + 1) << 1) | (L < 0 ? 1u : 0u);
      cur |= nibble << (4 * nib);
      if (++nib == 16) {
        s.push_back(static_cast<std::int64_t>(cur));
        cur = 0;
        nib = 0;
      }
    }
    if (nib) s.push_back(static_cast<std::int64_t>(cur));
    return Element(std::move(s));
  }

  static std::vector<std::int8_t> unpack(const Element& e) {
    std::size_t len = static_cast<std::size_t>(e[0]);
    std::vector<std::int8_t> w(len);
    for (std::size_t i = 0; i < len; ++i) {
      std::uint64_t slot = static_cast<std::uint64_t>(e[1 + i / 16]);
      std::uint64_t nibble = (slot >> (4 * (i % 16))) & 0xF;
      int j = static_cast<int>(nibble >> 1) - 1;
      w[i] = static_cast<std::int8_t>((nibble & 1) ? -(j + 1) : (j + 1));
    }
    return w;
  }

  Element mul(const Element& g, const Element& h) const override {
    auto a = unpack(g), b = unpack(h);
    std::size_t i = a.size(), j = 0;
    while (i > 0 && j < b.size() && a[i - 1] == -b[j]) {
      --i;
      ++j;
    }
    std::vector<std::int8_t> out;
    out.reserve(i + b.size() - j);
    out.insert(out.end(), a.begin(), a.begin() + i);
    out.insert(out.end(), b.begin() + j, b.end());
    return pack(out);
  }

  Element inv(const Element& g) const override {
    auto a = unpack(g);
    std::vector<std::int8_t> out(a.rbegin(), a.rend());
    for (auto& L : out) L = -L;
    return pack(out);
  }

  std::string format(const Element& g) const override {
    auto w = unpack(g);
    if (w.empty()) return "e";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t run = i;
      while (run < w.size() && w[run] == w[i]) ++run;
      std::int64_t exp =
          static_cast<std::int64_t>(run - i) * (w[i] < 0 ? -1 : 1);
      if (!first) os << '*';
      first = false;
      os << static_cast<char>('a' + std::abs(w[i]) - 1);
      if (exp != 1) os << '^' << exp;
      i = run;
    }
    return os.str();
  }

 private:
  int k_;
};

// ---------------------------------------------------------------------------
// infinite dihedral <r, s | s^2 = e, s r s = r^-1>; normal form r^k s^eps
// stored as [k, eps].
// ---------------------------------------------------------------------------

class DihedralInfinite final : public GroupOracle {
 public:
  DihedralInfinite() {
    name_ = "Dinf";
    identity_ = Element::of({0, 0});
    generators_ = {Element::of({1, 0}), Element::of({-1, 0}),
                   Element::of({0, 1})};
    generator_names_ = {"r", "r^-1", "s"};
    flex_ = FlexibilityClass::Stable;
    virtually_cyclic_ = true;
  }

  // (r^k1 s^e1)(r^k2 s^e2) = r^(k1 + (-1)^e1 k2) s^(e1^e2)
  Element mul(const Element& g, const Element& h) const override {
    std::int64_t k = g[0] + (g[1] ? -h[0] : h[0]);
    return Element::of({k, g[1] ^ h[1]});
  }

  Element inv(const Element& g) const override {
    return g[1] ? g : Element::of({-g[0], 0});
  }

  std::string format(const Element& g) const override {
    if (g[0] == 0 && g[1] == 0) return "e";
    std::ostringstream os;
    if (g[0] != 0) {
      os << 'r';
      if (g[0] != 1) os << '^' << g[0];
      if (g[1]) os << "*s";
    } else {
      os << 's';
    }
    return os.str();
  }

  Element axis() const override { return Element::of({1, 0}); }

  std::vector<Element> axis_transversal() const override {
    return {identity_, Element::of({0, 1})};
  }

  std::optional<std::pair<std::int64_t, int>> axis_decompose(
      const Element& g) const override {
    return std::make_pair(g[0], static_cast<int>(g[1]));
  }
};

// ---------------------------------------------------------------------------
// Z x C_m, canonical form [k, c]
// ---------------------------------------------------------------------------

class ZxC final : public GroupOracle {
 public:
  explicit ZxC(int m) : m_(m) {
    if (m < 2) throw ParseError("ZxCm requires m >= 2");
    name_ = "ZxC" + std::to_string(m);
    identity_ = Element::of({0, 0});
    generators_.push_back(Element::of({1, 0}));
    generator_names_.push_back("t");
    generators_.push_back(Element::of({-1, 0}));
    generator_names_.push_back("t^-1");
    generators_.push_back(Element::of({0, 1}));
    generator_names_.push_back("c");
    if (m > 2) {
      generators_.push_back(Element::of({0, m - 1}));
      generator_names_.push_back("c^-1");
    }
    flex_ = FlexibilityClass::Stable;
    virtually_cyclic_ = true;
  }

  Element mul(const Element& g, const Element& h) const override {
    return Element::of({g[0] + h[0], floor_mod(g[1] + h[1], m_)});
  }

  Element inv(const Element& g) const override {
    return Element::of({-g[0], floor_mod(-g[1], m_)});
  }

  std::string format(const Element& g) const override {
    return "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + ")";
  }

  Element axis() const override { return Element::of({1, 0}); }

  std::vector<Element> axis_transversal() const override {
    std::vector<Element> t;
    for (int c = 0; c < m_; ++c) t.push_back(Element::of({0, c}));
    return t;
  }

  std::optional<std::pair<std::int64_t, int>> axis_decompose(
      const Element& g) const override {
    return std::make_pair(g[0], static_cast<int>(g[1]));
  }

 protected:
  Element parse_literal(std::string_view expr) const override {
    auto vals = parse_tuple(expr, 2, name_);
    return Element::of({vals[0], floor_mod(vals[1], m_)});
  }

 private:
  int m_;
};

// ---------------------------------------------------------------------------
// finite cyclic C_m, canonical form [k], 0 <= k < m
// ---------------------------------------------------------------------------

class CyclicGroup final : public GroupOracle {
 public:
  explicit CyclicGroup(int m) : m_(m) {
    if (m < 2) throw ParseError("Cm requires m >= 2");
    name_ = "C" + std::to_string(m);
    identity_ = Element::of({0});
    generators_.push_back(Element::of({1}));
    generator_names_.push_back("g");
    generators_.push_back(Element::of({m - 1}));
    generator_names_.push_back("g^-1");
    finite_ = true;
  }

  Element mul(const Element& g, const Element& h) const override {
    return Element::of({floor_mod(g[0] + h[0], m_)});
  }

  Element inv(const Element& g) const override {
    return Element::of({floor_mod(-g[0], m_)});
  }

  std::string format(const Element& g) const override {
    return std::to_string(g[0]);
  }

 protected:
  Element parse_literal(std::string_view expr) const override {
    return Element::of({floor_mod(parse_int(expr, "element of Cm"), m_)});
  }

 private:
  int m_;
};

// ---------------------------------------------------------------------------
// finite symmetric Sym(n) on points 0..n-1; canonical form = moved-point
// pairs (shared with the finitary entry); generators = adjacent
// transpositions t_i = (i i+1).
// ---------------------------------------------------------------------------

class SymmetricGroup final : public GroupOracle {
 public:
  explicit SymmetricGroup(int n) : n_(n) {
    if (n < 2 || n > 8) throw ParseError("Symn requires 2 <= n <= 8");
    name_ = "Sym" + std::to_string(n);
    identity_ = Element();
    for (int i = 0; i + 1 < n; ++i) {
      generators_.push_back(Element::of({i, i + 1, i + 1, i}));
      generator_names_.push_back("t" + std::to_string(i));
    }
    finite_ = true;
  }

  Element mul(const Element& g, const Element& h) const override {
    return perm_compose(g, h);
  }

  Element inv(const Element& g) const override { return perm_inverse(g); }

  std::string format(const Element& g) const override {
    return perm_format(g);
  }

 protected:
  Element parse_literal(std::string_view expr) const override {
    return perm_parse_cycles(expr, n_, name_);
  }

 private:
  int n_;
};

// ---------------------------------------------------------------------------
// direct sum of countably many C_2; canonical form = sorted support list
// over indices 0,1,2,...; chain level n = supports inside {0..n-1}.
// ---------------------------------------------------------------------------

class DirectSumC2 final : public GroupOracle {
 public:
  DirectSumC2(int generator_count, int depth) {
    name_ = "DirSumC2";
    identity_ = Element();
    for (int i = 0; i < generator_count; ++i) {
      generators_.push_back(Element::of({i}));
      generator_names_.push_back("e" + std::to_string(i));
    }
    flex_ = FlexibilityClass::Stable;
    chain_depth_ = depth;
  }

  Element mul(const Element& g, const Element& h) const override {
    Element::Slots out;
    std::size_t i = 0, j = 0;
    while (i < g.size() && j < h.size()) {
      if (g[i] < h[j]) out.push_back(g[i++]);
      else if (h[j] < g[i]) out.push_back(h[j++]);
      else { ++i; ++j; }  // C2: equal indices cancel
    }
    while (i < g.size()) out.push_back(g[i++]);
    while (j < h.size()) out.push_back(h[j++]);
    return Element(std::move(out));
  }

  Element inv(const Element& g) const override { return g; }

  std::string format(const Element& g) const override {
    if (g.size() == 0) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < g.size(); ++i)
      os << (i ? "*" : "") << "e" << g[i];
    return os.str();
  }

  int chain_level(const Element& g) const override {
    return g.size() == 0 ? 0 : static_cast<int>(g[g.size() - 1] + 1);
  }

  int chain_materialization_cap() const override { return 20; }

  std::vector<Element> chain_members(int level) const override {
    if (level < 0) throw PreconditionError("negative chain level");
    if (level > 20)
      throw ResourceCapError("DirSumC2 level " + std::to_string(level) +
                                 " exceeds the materialization cap",
                             std::size_t(1) << std::min(level, 62));
    std::vector<Element> out;
    out.reserve(std::size_t(1) << level);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << level); ++mask) {
      Element::Slots s;
      for (int i = 0; i < level; ++i)
        if (mask & (std::uint64_t(1) << i)) s.push_back(i);
      out.push_back(Element(std::move(s)));
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// finitary symmetric group on 0,1,2,...; chain level n = Sym({0..n}),
// so level(g) = max moved point (0 for the identity). Strictly ascending:
// level 0 is trivial, level 1 = Sym({0,1}), ...
// ---------------------------------------------------------------------------

class FinitarySymmetric final : public GroupOracle {
 public:
  FinitarySymmetric(int generator_count, int depth) {
    name_ = "FinSym";
    identity_ = Element();
    for (int i = 0; i < generator_count; ++i) {
      generators_.push_back(Element::of({i, i + 1, i + 1, i}));
      generator_names_.push_back("t" + std::to_string(i));
    }
    flex_ = FlexibilityClass::Stable;
    chain_depth_ = depth;
  }

  Element mul(const Element& g, const Element& h) const override {
    return perm_compose(g, h);
  }

  Element inv(const Element& g) const override { return perm_inverse(g); }

  std::string format(const Element& g) const override {
    return perm_format(g);
  }

  int chain_level(const Element& g) const override {
    std::int64_t mx = 0;
    for (std::size_t i = 0; i < g.size(); i += 2) mx = std::max(mx, g[i]);
    return static_cast<int>(mx);
  }

  int chain_materialization_cap() const override { return 8; }

  std::vector<Element> chain_members(int level) const override {
    if (level < 0) throw PreconditionError("negative chain level");
    if (level > 8) {
      std::size_t proj = 1;
      for (int i = 2; i <= level + 1 && proj < (std::size_t(1) << 40); ++i)
        proj *= static_cast<std::size_t>(i);
      throw ResourceCapError("FinSym level " + std::to_string(level) +
                                 " exceeds the materialization cap",
                             proj);
    }
    std::vector<std::int64_t> img(static_cast<std::size_t>(level) + 1);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Element> out;
    do {
      PermMap m;
      for (std::size_t p = 0; p < img.size(); ++p)
        m[static_cast<std::int64_t>(p)] = img[p];
      out.push_back(perm_to_element(m));
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

 protected:
  Element parse_literal(std::string_view expr) const override {
    return perm_parse_cycles(expr, 64, name_);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// factory
// ---------------------------------------------------------------------------

GroupPtr make_group(std::string_view spec, const GroupOptions& opts) {
  std::string s = trim(spec);
  auto starts = [&](std::string_view p) {
    return s.size() > p.size() && s.compare(0, p.size(), p) == 0;
  };
  if (s == "Z") return std::make_shared<ZnGroup>(1);
  if (starts("Z^")) {
    int n = static_cast<int>(parse_int(s.substr(2), "rank of Z^n"));
    if (n < 2 || n > 8) throw ParseError("Z^n requires 2 <= n <= 8");
    return std::make_shared<ZnGroup>(n);
  }
  if (s == "Dinf") return std::make_shared<DihedralInfinite>();
  if (starts("ZxC"))
    return std::make_shared<ZxC>(
        static_cast<int>(parse_int(s.substr(3), "order of C_m")));
  if (s == "DirSumC2")
    return std::make_shared<DirectSumC2>(opts.dirsum_generators,
                                         opts.chain_depth);
  if (s == "FinSym")
    return std::make_shared<FinitarySymmetric>(opts.finsym_generators,
                                               opts.chain_depth);
  if (starts("F"))
    return std::make_shared<FreeGroup>(
        static_cast<int>(parse_int(s.substr(1), "rank of F_k")));
  if (starts("Sym"))
    return std::make_shared<SymmetricGroup>(
        static_cast<int>(parse_int(s.substr(3), "degree of Sym")));
  if (starts("C"))
    return std::make_shared<CyclicGroup>(
        static_cast<int>(parse_int(s.substr(1), "order of C_m")));
  throw ParseError("unknown group spec '" + s + "'");
}

std::vector<std::string> catalog_names() {
  return {"Z",    "Z^2",  "Z^3",      "F2",     "Dinf", "ZxC2",
          "ZxC6", "C12",  "Sym5",     "DirSumC2", "FinSym"};
}

std::vector<Element> sample_elements(const GroupOracle& oracle,
                                     std::size_t count, int max_len,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& gens = oracle.generators();
  std::set<Element> seen;
  std::vector<Element> out;
  out.push_back(oracle.identity());
  seen.insert(oracle.identity());
  std::uniform_int_distribution<int> len_dist(1, std::max(1, max_len));
  std::uniform_int_distribution<std::size_t> gen_dist(0, gens.size() - 1);
  std::size_t tries = 0;
  while (out.size() < count && tries < count * 40) {
    ++tries;
    Element g = oracle.identity();
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) g = oracle.mul(g, gens[gen_dist(rng)]);
    if (seen.insert(g).second) out.push_back(g);
  }
  return out;
}

bool has_infinite_order_at_scale(const GroupOracle& oracle, const Element& z,
                                 int bound) {
  if (z == oracle.identity()) return false;
  Element p = z;
  for (int j = 1; j <= bound; ++j) {
    if (p == oracle.identity()) return false;
    p = oracle.mul(p, z);
  }
  return true;
}

}  // namespace gz
