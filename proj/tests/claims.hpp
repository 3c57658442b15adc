#pragma once

// Local lower-bound checks on built reductions: every gadget needs d solution
// vertices and every transmitter 5d + 1, or 5d + 2 when it separates an outside pair.
// Everything outside the checked region is placed in the solution. For LD and OLD this
// can only lower the local minimum. For ID, two adjacent members of S still need a
// separator, so a host may force more than the bound.

#include <string>

#include "ivc/codes.hpp"
#include "ivc/reductions.hpp"

namespace ivc::testing {

inline VertexSet everything_but(int n, const std::vector<VertexId>& region) {
  VertexSet s = VertexSet::full(n);
  for (VertexId v : region) s.erase(v);
  return s;
}

struct LocalMinima {
  std::vector<int> gadgets;
  std::vector<int> transmitters, separating;
};

inline LocalMinima local_minima(const ReductionOutput& out) {
  const auto g = build_graph(out.model);
  const auto criterion = criterion_for(dominating_gadget(out.kind).problem);
  const int n = g.order();
  const auto family = constraint_family(g, criterion);
  LocalMinima mins;
  for (const auto& gd : out.gadgets) mins.gadgets.push_back(min_completion(n, family, everything_but(n, gd), gd).value_or(-1));
  for (const auto& t : out.transmitters) {
    auto region = t.vertices();
    auto fixed = everything_but(n, region);
    mins.transmitters.push_back(min_completion(n, family, fixed, region).value_or(-1));
    mins.separating.push_back(min_completion(n, family, fixed, region, {VertexSet(n, {t.u, t.w})}).value_or(-1));
  }
  return mins;
}

/// Returns "" or the first gadget / transmitter below its bound.
inline std::string check_local_bounds(const ReductionOutput& out) {
  const int d = dominating_gadget(out.kind).d;
  auto mins = local_minima(out);
  for (std::size_t i = 0; i < mins.gadgets.size(); ++i)
    if (mins.gadgets[i] < d) return "gadget " + out.roles[out.gadgets[i][0]];
  for (std::size_t i = 0; i < mins.transmitters.size(); ++i) {
    if (mins.transmitters[i] < 5 * d + 1) return "transmitter " + out.transmitters[i].label;
    if (mins.separating[i] < 5 * d + 2) return "transmitter " + out.transmitters[i].label + " (separating)";
  }
  return "";
}

}  // namespace ivc::testing
