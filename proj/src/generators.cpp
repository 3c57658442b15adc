#include "ivc/generators.hpp"

#include <algorithm>

#include "ivc/errors.hpp"

namespace ivc {

std::string to_string(Family family) {
  switch (family) {
    case Family::Path: return "path";
    case Family::Clique: return "clique";
    case Family::CycleGraph: return "cycle-graph";
    case Family::ChordalFig7: return "chordal-fig7";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::Path, Family::Clique, Family::CycleGraph, Family::ChordalFig7})
    if (to_string(f) == text) return f;
  throw ValidationError("unknown family '" + text + "' (expected path, clique, cycle-graph or chordal-fig7)");
}

IntervalModel path_model(int n) {
  std::vector<Interval> out;
  for (int i = 0; i < n; ++i) out.push_back({i, Coord(2 * i), Coord(2 * i + 3)});
  return IntervalModel(std::move(out));
}

IntervalModel clique_model(int n) {
  std::vector<Interval> out;
  for (int i = 0; i < n; ++i) out.push_back({i, Coord(i), Coord(2 * n - 1 - i)});
  return IntervalModel(std::move(out));
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

FamilyOutput chordal_fig7(int t) {
  // kernel, 0-indexed: u = 0, v = 6
  const std::vector<std::pair<VertexId, VertexId>> kernel = {
      {0, 2}, {2, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 3}, {3, 2}, {4, 5}, {5, 6}, {6, 4}};
  FamilyOutput out;
  out.graph = Graph::from_edges(7, kernel);
  out.u = 0;
  out.v = 6;
  std::vector<VertexId> black;
  for (VertexId anchor : {1, 3}) {
    VertexId prev = anchor;
    for (int i = 0; i < t; ++i) {
      VertexId x = out.graph.add_vertex();
      out.graph.add_edge(prev, x);
      prev = x;
    }
    black.push_back(prev);
  }
  out.black = VertexSet::from_members(out.graph.order(), black);
  return out;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0), order;
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    VertexId best = -1;
    for (VertexId x = 0; x < n; ++x)
      if (!done[x] && (best < 0 || weight[x] > weight[best])) best = x;
    done[best] = 1;
    order.push_back(best);
    for (VertexId y : g.neighbors(best))
      if (!done[y]) ++weight[y];
  }
  // reverse of the visit order is a perfect elimination order iff g is chordal
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (VertexId x : order) {
    // earlier-visited neighbours of x must form a clique; test against the latest one
    VertexId parent = -1;
    for (VertexId y : g.neighbors(x))
      if (pos[y] < pos[x] && (parent < 0 || pos[y] > pos[parent])) parent = y;
    if (parent < 0) continue;
    for (VertexId y : g.neighbors(x))
      if (y != parent && pos[y] < pos[x] && !g.has_edge(parent, y)) return false;
  }
  return true;
}

FamilyOutput make_family(const FamilySpec& spec) {
  const int lo = spec.family == Family::CycleGraph ? 3 : spec.family == Family::ChordalFig7 ? 2 : 1;
  if (spec.size < lo)
    throw ValidationError(to_string(spec.family) + " needs size >= " + std::to_string(lo) + ", got " +
                          std::to_string(spec.size));
  FamilyOutput out;
  switch (spec.family) {
    case Family::Path:
      out.model = path_model(spec.size);
      break;
    case Family::Clique:
      out.model = clique_model(spec.size);
      break;
    case Family::CycleGraph:
      out.graph = cycle_graph(spec.size);
      return out;
    case Family::ChordalFig7:
      return chordal_fig7(spec.size);
  }
  out.graph = build_graph(*out.model);
  return out;
}

}  // namespace ivc
