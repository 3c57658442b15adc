#include <doctest.h>

#include "ivc/decomposition.hpp"
#include "lemmas.hpp"
#include "support.hpp"

using namespace ivc;
using ivc::testing::model_of;

TEST_CASE("single interval") {
  auto dec = build_path_decomposition(model_of({{0, 1}}));
  REQUIRE(dec.events.size() == 2);
  CHECK(dec.events[0].kind == EventKind::Leaf);
  CHECK(dec.events[1].kind == EventKind::Root);
  CHECK(dec.width() == 0);
}

TEST_CASE("chain of three, golden dump") {
  auto dec = build_path_decomposition(model_of({{0, 3}, {2, 5}, {4, 7}}));
  CHECK(dump(dec) ==
        "L 0 | 0\n"
        "I 1 | 0 1\n"
        "F 0 | 1\n"
        "I 2 | 1 2\n"
        "F 1 | 2\n"
        "R 2 |\n");
  CHECK(dec.width() == 1);
}

TEST_CASE("empty model is rejected") { CHECK_THROWS_AS(build_path_decomposition(IntervalModel()), std::invalid_argument); }

TEST_CASE("bag_distance_pairs") {
  // path 0-1-2-3-4; G^4 is complete, so one bag holds everything
  auto m = model_of({{0, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 11}});
  auto g = build_graph(m);
  auto d = all_pairs_distances(g);
  LocalDistances local(g, 2);
  std::vector<VertexId> all{0, 1, 2, 3, 4};
  auto pairs = bag_distance_pairs(d, all);
  CHECK(pairs.size() == 7);
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair<VertexId, VertexId>{0, 3}) == pairs.end());
  CHECK(bag_distance_pairs(local, all) == pairs);
  CHECK(bag_distance_pairs(d, {2}).empty());
  CHECK(bag_distance_pairs(d, {0, 1, 2}).size() == 3);
}

TEST_CASE("contract and locality on random models") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto m = ivc::testing::random_any(1 + static_cast<int>(seed % 40), seed);
    auto d = all_pairs_distances(build_graph(m));
    CAPTURE(seed);
    CHECK(ivc::testing::check_decomposition_contract(m) == 0);
    CHECK(ivc::testing::check_decomposition_contract(power_model(m, 4)) == 0);
    CHECK(ivc::testing::check_bag_locality(m, d, 4) == 0);
    // bags of G^4 are pairwise within distance 4 in G
    for (const auto& e : build_path_decomposition(power_model(m, 4)).events)
      for (VertexId a : e.bag)
        for (VertexId b : e.bag) CHECK(d(a, b) <= 4);
  }
}
