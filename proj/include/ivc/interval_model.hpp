#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ivc/graph.hpp"

namespace ivc {

/// Exact endpoint coordinate.
using Coord = boost::rational<std::int64_t>;

std::string format_coord(const Coord& c);
/// Parses "p/q" or an integer. Throws ValidationError on malformed text.
Coord parse_coord(const std::string& text);

struct Interval {
  VertexId id = 0;
  Coord left;
  Coord right;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed intervals with ids 0..n-1 and pairwise distinct endpoints.
///
/// Construction validates every invariant; a model that exists is valid.
/// The left-endpoint order <_L and right-endpoint order <_R are computed once.
class IntervalModel {
 public:
  IntervalModel() = default;
  /// Intervals may arrive in any order; they are stored by id.
  /// Throws ValidationError on gaps in ids, left >= right, or shared endpoints.
  explicit IntervalModel(std::vector<Interval> intervals);

  int size() const { return static_cast<int>(intervals_.size()); }
  bool empty() const { return intervals_.empty(); }
  const Interval& operator[](VertexId v) const { return intervals_[v]; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Coord& left(VertexId v) const { return intervals_[v].left; }
  const Coord& right(VertexId v) const { return intervals_[v].right; }

  /// Vertices sorted by left endpoint (<_L).
  const std::vector<VertexId>& left_order() const { return left_order_; }
  /// Vertices sorted by right endpoint (<_R).
  const std::vector<VertexId>& right_order() const { return right_order_; }
  /// Position of v in <_L / <_R.
  int left_rank(VertexId v) const { return left_rank_[v]; }
  int right_rank(VertexId v) const { return right_rank_[v]; }

  bool intersects(VertexId u, VertexId v) const {
    return std::max(left(u), left(v)) <= std::min(right(u), right(v));
  }

  friend bool operator==(const IntervalModel& a, const IntervalModel& b) {
    return a.intervals_ == b.intervals_;
  }

 private:
  std::vector<Interval> intervals_;
  std::vector<VertexId> left_order_, right_order_;
  std::vector<int> left_rank_, right_rank_;
};

/// Builds a model, first repairing tied or degenerate endpoints when `repair` is set.
///
/// Repair replaces all coordinates by integer ranks of a stable order in which, at a
/// shared coordinate, left endpoints precede right endpoints and ids break remaining
/// ties. Touching intervals therefore keep intersecting. Inputs without ties are
/// returned unchanged.
IntervalModel make_model(std::vector<Interval> intervals, bool repair = true);

/// Same orders, coordinates replaced by 0..2n-1.
IntervalModel normalized(const IntervalModel& model);

/// Intersection graph of the model.
Graph build_graph(const IntervalModel& model);

/// Graph with an edge between every pair at distance 1..d in g.
Graph graph_power(const Graph& g, int d);

/// Interval model of G^d inducing the same <_L and <_R as `model`.
/// Throws std::invalid_argument for d < 2.
IntervalModel power_model(const IntervalModel& model, int d);

enum class ModelStyle { Uniform, UnitLength, LongThin };

std::string to_string(ModelStyle style);
ModelStyle parse_model_style(const std::string& text);

/// Deterministic random model. For LongThin, every interval reaches at most
/// `window` later left endpoints, which keeps the clique number of G^4 at most
/// 4 * window + 1.
IntervalModel random_model(int n, std::uint64_t seed, ModelStyle style, int window = 2);

/// Vertex sets of the connected components, each sorted by id, ordered by <_L of
/// their first interval.
std::vector<std::vector<VertexId>> model_components(const IntervalModel& model);

/// Restriction of the model to `ids`; vertex ids[i] becomes i.
IntervalModel submodel(const IntervalModel& model, const std::vector<VertexId>& ids);

}  // namespace ivc
