#include "ivc/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ivc {

char event_code(EventKind kind) {
  switch (kind) {
    case EventKind::Leaf: return 'L';
    case EventKind::Introduce: return 'I';
    case EventKind::Forget: return 'F';
    case EventKind::Root: return 'R';
  }
  return '?';
}

int PathDecomposition::max_bag_size() const {
  std::size_t best = 0;
  for (const auto& e : events) best = std::max(best, e.bag.size());
  return static_cast<int>(best);
}

namespace {

struct Point {
  Coord x;
  bool is_right;
  VertexId id;
};

std::vector<Point> sorted_endpoints(const IntervalModel& model) {
  std::vector<Point> pts;
  pts.reserve(2 * static_cast<std::size_t>(model.size()));
  for (const auto& iv : model.intervals()) {
    pts.push_back({iv.left, false, iv.id});
    pts.push_back({iv.right, true, iv.id});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  return pts;
}

template <class Dist>
std::vector<std::pair<VertexId, VertexId>> close_pairs(const Dist& dist, const std::vector<VertexId>& bag) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < bag.size(); ++i)
    for (std::size_t j = i + 1; j < bag.size(); ++j)
      if (dist(bag[i], bag[j]) <= 2) out.emplace_back(bag[i], bag[j]);
  return out;
}

}  // namespace

PathDecomposition build_path_decomposition(const IntervalModel& model) {
  if (model.empty()) throw std::invalid_argument("cannot decompose an empty model");
  PathDecomposition dec;
  std::vector<VertexId> bag;
  auto pts = sorted_endpoints(model);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    EventKind kind;
    if (p.is_right) {
      bag.erase(std::find(bag.begin(), bag.end(), p.id));
      kind = i + 1 == pts.size() ? EventKind::Root : EventKind::Forget;
    } else {
      bag.push_back(p.id);
      kind = i == 0 ? EventKind::Leaf : EventKind::Introduce;
    }
    dec.events.push_back({kind, p.id, p.x, bag});
  }
  return dec;
}

std::vector<std::pair<VertexId, VertexId>> bag_distance_pairs(const DistanceMatrix& dist,
                                                               const std::vector<VertexId>& bag) {
  return close_pairs(dist, bag);
}

std::vector<std::pair<VertexId, VertexId>> bag_distance_pairs(const LocalDistances& dist,
                                                               const std::vector<VertexId>& bag) {
  return close_pairs(dist, bag);
}

std::string dump(const PathDecomposition& dec) {
  std::ostringstream out;
  for (const auto& e : dec.events) {
    out << event_code(e.kind) << ' ' << e.vertex << " |";
    for (VertexId v : e.bag) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

int max_stabbing_count(const IntervalModel& model) {
  int active = 0, best = 0;
  for (const auto& p : sorted_endpoints(model)) {
    active += p.is_right ? -1 : 1;
    best = std::max(best, active);
  }
  return best;
}

}  // namespace ivc
