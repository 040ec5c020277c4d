#include "groupzero/ends.hpp"

#include <algorithm>
#include <sstream>

namespace gz {

std::string to_string(EndSide s) {
  return s == EndSide::Positive ? "Positive" : "Negative";
}

std::string to_string(EndsClass c) {
  switch (c) {
    case EndsClass::ZeroEnds: return "ZeroEnds";
    case EndsClass::OneEnd: return "OneEnd";
    case EndsClass::TwoEnds: return "TwoEnds";
    case EndsClass::ManyEndsGrowing: return "ManyEndsGrowing";
    default: return "UnknownAtScale";
  }
}

bool EndDescriptor::tail_contains(const Element& g, int n) const {
  auto dec = oracle->axis_decompose(g);
  if (!dec) return false;
  std::int64_t k = dec->first;
  return side == EndSide::Positive ? k >= n : k <= -n;
}

SubsetSpec EndDescriptor::as_subset() const { return tail_subset(tail_start); }

SubsetSpec EndDescriptor::tail_subset(int n) const {
  EndDescriptor copy = *this;
  std::ostringstream name;
  name << "end:" << (side == EndSide::Positive ? "+" : "-");
  if (n != tail_start) name << ":tail" << n;
  return SubsetSpec{name.str(), SubsetTag::Ray, [copy, n](const Element& g) {
                      return copy.tail_contains(g, n);
                    }};
}

std::string EndDescriptor::describe() const {
  std::ostringstream os;
  os << "{ z^k . t : t in {";
  for (std::size_t i = 0; i < transversal.size(); ++i)
    os << (i ? ", " : "") << oracle->format(transversal[i]);
  os << "}, k " << (side == EndSide::Positive ? ">= " : "<= -") << tail_start
     << " }, z = " << oracle->format(axis);
  return os.str();
}

EndDescriptor end_descriptor(const GroupPtr& oracle, EndSide side) {
  if (!oracle->is_virtually_cyclic())
    throw PreconditionError(oracle->name() +
                            " is not a virtually cyclic catalog entry");
  EndDescriptor d;
  d.oracle = oracle;
  d.axis = oracle->axis();
  d.side = side;
  d.transversal = oracle->axis_transversal();
  d.tail_start = 1;
  return d;
}

EndsReport ends_estimate(const GroupPtr& oracle, int r_max, int window,
                         std::size_t cap) {
  if (window < 2 || r_max < window)
    throw PreconditionError("ends_estimate requires r_max >= window >= 2");

  EndsReport rep;
  rep.r_max = r_max;
  rep.window = window;

  const int R_wanted = 3 * r_max + window;
  PartialBall pb = ball_up_to(*oracle, R_wanted, cap);
  const Ball& b = pb.ball;
  rep.saturated = b.saturated();
  rep.saturation_radius = b.saturation_radius();
  if (pb.truncated) {
    std::ostringstream os;
    os << "outer radius capped at " << b.radius() << " (requested " << R_wanted
       << ", projected " << pb.projected << " elements over the cap of "
       << cap << ")";
    rep.note = os.str();
  }

  bool all_present = true;
  for (int r = 1; r <= r_max; ++r) {
    int R = std::min(3 * r + window, b.radius());
    if (R < r + 2) {
      all_present = false;
      continue;  // annulus too thin to mean anything at this cap
    }
    rep.outer_radius_used[r] = R;
    AnnulusComponents ac = components_outside(*oracle, b, r - 1, R);
    rep.counts_by_radius[r] = ac.touching_count();
  }

  if (rep.saturated) {
    rep.classification = EndsClass::ZeroEnds;
    return rep;
  }

  // classification over the last `window` radii
  std::vector<std::size_t> tail;
  for (int r = r_max - window + 1; r <= r_max; ++r) {
    auto it = rep.counts_by_radius.find(r);
    if (it == rep.counts_by_radius.end()) {
      all_present = false;
      break;
    }
    tail.push_back(it->second);
  }
  if (!all_present || tail.size() != static_cast<std::size_t>(window)) {
    rep.classification = EndsClass::UnknownAtScale;
    if (rep.note.empty()) rep.note = "stabilization window incomplete";
    return rep;
  }

  bool constant = std::all_of(tail.begin(), tail.end(),
                              [&](std::size_t c) { return c == tail.front(); });
  bool strictly_growing = true;
  for (std::size_t i = 0; i + 1 < tail.size(); ++i)
    if (tail[i] >= tail[i + 1]) strictly_growing = false;

  if (constant) {
    rep.stabilized_count = tail.front();
    if (tail.front() == 1) rep.classification = EndsClass::OneEnd;
    else if (tail.front() == 2) rep.classification = EndsClass::TwoEnds;
    else {
      rep.classification = EndsClass::UnknownAtScale;
      rep.note = "stabilized at a count outside {1,2}";
    }
  } else if (strictly_growing) {
    rep.classification = EndsClass::ManyEndsGrowing;
  } else {
    rep.classification = EndsClass::UnknownAtScale;
    rep.note = "counts neither constant nor strictly growing over the window";
  }
  return rep;
}

}  // namespace gz
