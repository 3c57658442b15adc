#pragma once

#include <random>

#include "ivc/graph.hpp"
#include "ivc/interval_model.hpp"

namespace ivc::testing {

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

inline IntervalModel model_of(std::initializer_list<std::pair<int, int>> spans) {
  std::vector<Interval> out;
  int id = 0;
  for (auto [l, r] : spans) out.push_back({id++, Coord(l), Coord(r)});
  return IntervalModel(std::move(out));
}

/// Cycles through the three random styles.
inline IntervalModel random_any(int n, std::uint64_t seed) {
  static const ModelStyle styles[] = {ModelStyle::Uniform, ModelStyle::UnitLength, ModelStyle::LongThin};
  return random_model(n, seed, styles[seed % 3], 2 + static_cast<int>(seed % 3));
}

}  // namespace ivc::testing
