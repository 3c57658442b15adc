#include "ivc/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ivc/errors.hpp"

namespace ivc {

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  auto insert = [](std::vector<VertexId>& a, VertexId x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it == a.end() || *it != x) a.insert(it, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

VertexId Graph::add_vertex() {
  adj_.emplace_back();
  return order() - 1;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < order(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfinity);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == kInfinity) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  for (VertexId s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (VertexId t = 0; t < g.order(); ++t) m.at(s, t) = row[t];
  }
  return m;
}

LocalDistances::LocalDistances(const Graph& g, int radius)
    : radius_(radius), balls_(static_cast<std::size_t>(g.order())) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfinity);
  std::vector<VertexId> touched;
  for (VertexId s = 0; s < g.order(); ++s) {
    touched.clear();
    dist[s] = 0;
    touched.push_back(s);
    // touched doubles as the BFS queue
    for (std::size_t head = 0; head < touched.size(); ++head) {
      VertexId x = touched[head];
      if (dist[x] == radius) continue;
      for (VertexId y : g.neighbors(x)) {
        if (dist[y] == kInfinity) {
          dist[y] = dist[x] + 1;
          touched.push_back(y);
        }
      }
    }
    auto& ball = balls_[s];
    ball.reserve(touched.size());
    for (VertexId x : touched) {
      ball.emplace_back(x, dist[x]);
      dist[x] = kInfinity;
    }
    std::sort(ball.begin(), ball.end());
  }
}

int LocalDistances::operator()(VertexId u, VertexId v) const {
  const auto& ball = balls_[u];
  auto it = std::lower_bound(ball.begin(), ball.end(), std::pair<VertexId, int>(v, -1));
  if (it == ball.end() || it->first != v) return kInfinity;
  return it->second;
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<VertexId> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (comp[y] == -1) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace ivc
