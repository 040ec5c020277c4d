#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace gz {

/// Canonical form of a group element: a short sequence of 64-bit slots whose
/// interpretation is fixed by the owning oracle (coordinate vector, packed
/// reduced word, normal-form pair, sorted support list, ...). Equality of
/// elements is equality of slots; the (size, lexicographic) order is the
/// canonical total order used wherever a deterministic tie-break is needed.
class Element {
 public:
  using Slots = boost::container::small_vector<std::int64_t, 4>;

  Element() = default;
  explicit Element(Slots s) : slots_(std::move(s)) {}

  static Element of(std::initializer_list<std::int64_t> xs) {
    return Element(Slots(xs.begin(), xs.end()));
  }

  const Slots& slots() const { return slots_; }
  std::size_t size() const { return slots_.size(); }
  std::int64_t operator[](std::size_t i) const { return slots_[i]; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.slots_ == b.slots_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }
  friend bool operator<(const Element& a, const Element& b) {
    if (a.slots_.size() != b.slots_.size())
      return a.slots_.size() < b.slots_.size();
    for (std::size_t i = 0; i < a.slots_.size(); ++i)
      if (a.slots_[i] != b.slots_[i]) return a.slots_[i] < b.slots_[i];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (slots_.size() + 1);
    for (std::int64_t v : slots_) {
      std::uint64_t x = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + h;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      h = x ^ (x >> 31);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  Slots slots_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

/// Element expression could not be parsed for the target oracle.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured element cap. Carries the
/// projected size so callers can report it.
class ResourceCapError : public std::runtime_error {
 public:
  ResourceCapError(const std::string& what, std::size_t projected)
      : std::runtime_error(what), projected_size(projected) {}
  std::size_t projected_size;
};

/// An operation precondition was violated (wrong oracle kind, radius too
/// small, sets not disjoint, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gz

template <>
struct std::hash<gz::Element> {
  std::size_t operator()(const gz::Element& e) const { return e.hash(); }
};
