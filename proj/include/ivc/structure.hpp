#pragma once

#include <optional>
#include <vector>

#include "ivc/graph.hpp"
#include "ivc/interval_model.hpp"

namespace ivc {

enum class Direction { Left, Right };

/// First steps of every rightmost and leftmost path, computed once per model.
///
/// The rightmost step of u is its neighbour with the largest right endpoint,
/// provided that endpoint lies beyond r(u); otherwise u is extreme within its
/// component and the step is absent. Leftmost steps mirror this.
class PathSteps {
 public:
  PathSteps(const IntervalModel& model, const Graph& g);

  std::optional<VertexId> step(VertexId u, Direction dir) const {
    VertexId s = (dir == Direction::Right ? right_ : left_)[u];
    return s < 0 ? std::nullopt : std::optional<VertexId>(s);
  }
  std::optional<VertexId> rightmost_step(VertexId u) const { return step(u, Direction::Right); }
  std::optional<VertexId> leftmost_step(VertexId u) const { return step(u, Direction::Left); }

  /// u = u_0, u_1, ..., u_p, stopping at the extreme interval.
  std::vector<VertexId> path(VertexId u, Direction dir) const;

 private:
  std::vector<VertexId> right_, left_;
};

enum class Side { None, Left, Right };

/// Right when x starts after both intervals end and d(x,u) != d(x,v); Left when x
/// ends before both start and d(x,u) != d(x,v); None otherwise.
Side separates_strictly(const IntervalModel& model, const DistanceMatrix& dist, VertexId u, VertexId v,
                        VertexId x);

}  // namespace ivc
