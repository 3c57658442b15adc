#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ivc/graph.hpp"
#include "ivc/interval_model.hpp"

namespace ivc {

enum class EventKind { Leaf, Introduce, Forget, Root };

char event_code(EventKind kind);

/// One node of the nice path decomposition, listed leaf first.
///
/// Root is the forget of the last interval and leaves an empty bag. `point` is the
/// sweep coordinate; for forgets the bag describes the line just after it.
struct DecompositionEvent {
  EventKind kind;
  VertexId vertex;
  Coord point;
  /// Bag after the event, ordered by introduction (hence by <_L).
  std::vector<VertexId> bag;
};

struct PathDecomposition {
  std::vector<DecompositionEvent> events;

  int max_bag_size() const;
  int width() const { return max_bag_size() - 1; }
};

/// Endpoint sweep. Throws std::invalid_argument on an empty model.
PathDecomposition build_path_decomposition(const IntervalModel& model);

/// Pairs {u, v} of `bag` (u before v in bag order) with d(u, v) <= 2.
std::vector<std::pair<VertexId, VertexId>> bag_distance_pairs(const DistanceMatrix& dist,
                                                               const std::vector<VertexId>& bag);
std::vector<std::pair<VertexId, VertexId>> bag_distance_pairs(const LocalDistances& dist,
                                                               const std::vector<VertexId>& bag);

/// One line per event: `<code> v | bag...` with codes L, I, F, R.
std::string dump(const PathDecomposition& dec);

/// Largest number of intervals sharing a point.
int max_stabbing_count(const IntervalModel& model);

}  // namespace ivc
