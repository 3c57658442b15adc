#include "ivc/structure.hpp"

namespace ivc {

PathSteps::PathSteps(const IntervalModel& model, const Graph& g)
    : right_(static_cast<std::size_t>(model.size()), -1), left_(static_cast<std::size_t>(model.size()), -1) {
  for (VertexId u = 0; u < model.size(); ++u) {
    VertexId r = u, l = u;
    for (VertexId y : g.neighbors(u)) {
      if (model.right(y) > model.right(r)) r = y;
      if (model.left(y) < model.left(l)) l = y;
    }
    if (r != u) right_[u] = r;
    if (l != u) left_[u] = l;
  }
}

std::vector<VertexId> PathSteps::path(VertexId u, Direction dir) const {
  std::vector<VertexId> out{u};
  while (auto next = step(out.back(), dir)) out.push_back(*next);
  return out;
}

Side separates_strictly(const IntervalModel& model, const DistanceMatrix& dist, VertexId u, VertexId v,
                        VertexId x) {
  if (dist(x, u) == dist(x, v)) return Side::None;
  if (model.left(x) > std::max(model.right(u), model.right(v))) return Side::Right;
  if (model.right(x) < std::min(model.left(u), model.left(v))) return Side::Left;
  return Side::None;
}

}  // namespace ivc
