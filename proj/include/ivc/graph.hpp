#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace ivc {

using VertexId = int;

/// Distance value used for vertices in different components.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Adds uv if absent. Self-loops are rejected with ValidationError.
  void add_edge(VertexId u, VertexId v);

  /// Appends an isolated vertex and returns its id.
  VertexId add_vertex();

  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
};

/// Row-major n x n distance table; kInfinity between components.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInfinity) {}

  int order() const { return n_; }
  int operator()(VertexId u, VertexId v) const { return d_[index(u, v)]; }
  int& at(VertexId u, VertexId v) { return d_[index(u, v)]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }
  int n_ = 0;
  std::vector<int> d_;
};

std::vector<int> bfs_distances(const Graph& g, VertexId source);
DistanceMatrix all_pairs_distances(const Graph& g);

/// Distances up to a fixed radius, stored per vertex as a sorted ball.
/// Queries beyond the radius (or across components) return kInfinity.
class LocalDistances {
 public:
  LocalDistances(const Graph& g, int radius);

  int radius() const { return radius_; }
  int operator()(VertexId u, VertexId v) const;
  /// (vertex, distance) pairs within the radius of v, sorted by vertex id.
  const std::vector<std::pair<VertexId, int>>& ball(VertexId v) const { return balls_[v]; }

 private:
  int radius_;
  std::vector<std::vector<std::pair<VertexId, int>>> balls_;
};

bool is_connected(const Graph& g);

/// Component index for every vertex, numbered in order of smallest member.
std::vector<int> connected_components(const Graph& g);

}  // namespace ivc
