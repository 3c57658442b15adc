#include <doctest.h>

#include "ivc/decomposition.hpp"
#include "ivc/errors.hpp"
#include "ivc/interval_model.hpp"
#include "support.hpp"

using namespace ivc;
using ivc::testing::model_of;

TEST_CASE("build_graph on small models") {
  auto chain = build_graph(model_of({{0, 3}, {2, 5}, {4, 7}}));
  CHECK(chain.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});

  auto single = build_graph(model_of({{0, 1}}));
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);

  auto star = build_graph(model_of({{0, 10}, {1, 2}, {3, 4}}));
  CHECK(star.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}});
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(IntervalModel({{0, Coord(0), Coord(2)}, {1, Coord(2), Coord(3)}}), ValidationError);
  CHECK_THROWS_AS(IntervalModel({{0, Coord(3), Coord(2)}}), ValidationError);
  CHECK_THROWS_AS(IntervalModel({{0, Coord(0), Coord(1)}, {2, Coord(2), Coord(3)}}), ValidationError);
  try {
    IntervalModel({{0, Coord(0), Coord(5)}, {1, Coord(5), Coord(7)}});
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find('5') != std::string::npos);
  }
}

TEST_CASE("repair keeps touching intervals adjacent") {
  auto m = make_model({{0, Coord(0), Coord(2)}, {1, Coord(2), Coord(4)}, {2, Coord(4), Coord(4)}});
  auto g = build_graph(m);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(make_model({{0, Coord(0), Coord(2)}, {1, Coord(2), Coord(4)}}, false), ValidationError);
}

TEST_CASE("distances") {
  auto p3 = build_graph(model_of({{0, 3}, {2, 5}, {4, 7}}));
  CHECK(all_pairs_distances(p3)(0, 2) == 2);

  Graph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  auto dk = all_pairs_distances(k4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(dk(a, b) == (a == b ? 0 : 1));

  auto two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(all_pairs_distances(two)(0, 3) == kInfinity);
}

TEST_CASE("distance matrix properties on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = ivc::testing::random_graph(12, 0.25, seed);
    auto d = all_pairs_distances(g);
    LocalDistances local(g, 3);
    for (int a = 0; a < g.order(); ++a) {
      auto row = bfs_distances(g, a);
      CHECK(d(a, a) == 0);
      for (int b = 0; b < g.order(); ++b) {
        CHECK(d(a, b) == d(b, a));
        CHECK(d(a, b) == row[b]);
        CHECK(local(a, b) == (d(a, b) <= 3 ? d(a, b) : kInfinity));
        for (int c = 0; c < g.order(); ++c)
          if (d(a, c) != kInfinity && d(c, b) != kInfinity) CHECK(d(a, b) <= d(a, c) + d(c, b));
      }
    }
  }
}

TEST_CASE("power_model examples") {
  auto chain = model_of({{0, 3}, {2, 5}, {4, 7}});
  auto sq = build_graph(power_model(chain, 2));
  CHECK(sq.edge_count() == 3);

  auto clique = model_of({{0, 5}, {1, 4}, {2, 3}});
  auto p = power_model(clique, 2);
  CHECK(build_graph(p) == build_graph(clique));
  CHECK(p.left_order() == clique.left_order());
  CHECK(p.right_order() == clique.right_order());

  CHECK_THROWS_AS(power_model(chain, 1), std::invalid_argument);

  auto path = model_of({{0, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 11}});
  auto full = build_graph(power_model(path, 4));
  CHECK(full.edge_count() == 10);
}

TEST_CASE("power_model matches graph_power and keeps both orders") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto m = ivc::testing::random_any(5 + static_cast<int>(seed % 36), seed);
    auto g = build_graph(m);
    for (int d : {2, 3, 4}) {
      auto p = power_model(m, d);
      CHECK(p.left_order() == m.left_order());
      CHECK(p.right_order() == m.right_order());
      CHECK(build_graph(p) == graph_power(g, d));
    }
  }
}

TEST_CASE("graph_power against the distance table") {
  auto g = ivc::testing::random_graph(15, 0.15, 7);
  auto d = all_pairs_distances(g);
  auto g3 = graph_power(g, 3);
  for (int a = 0; a < 15; ++a)
    for (int b = 0; b < 15; ++b)
      if (a != b) CHECK(g3.has_edge(a, b) == (d(a, b) <= 3));
}

TEST_CASE("random_model") {
  for (auto style : {ModelStyle::Uniform, ModelStyle::UnitLength, ModelStyle::LongThin}) {
    CHECK(random_model(1, 9, style).size() == 1);
    CHECK(random_model(40, 123, style) == random_model(40, 123, style));
    CHECK_FALSE(random_model(40, 123, style) == random_model(40, 124, style));
  }
  for (int window : {1, 2, 3}) {
    auto m = random_model(200, 5, ModelStyle::LongThin, window);
    CHECK(build_path_decomposition(power_model(m, 4)).max_bag_size() <= 4 * window + 1);
  }
  CHECK(parse_model_style("unit-length") == ModelStyle::UnitLength);
  CHECK_THROWS_AS(parse_model_style("bogus"), ValidationError);
}

TEST_CASE("components and submodels") {
  auto m = model_of({{0, 2}, {5, 7}, {1, 3}, {6, 8}, {10, 11}});
  auto comps = model_components(m);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<VertexId>{0, 2});
  CHECK(comps[1] == std::vector<VertexId>{1, 3});
  CHECK(comps[2] == std::vector<VertexId>{4});
  auto sub = submodel(m, comps[1]);
  CHECK(sub.size() == 2);
  CHECK(build_graph(sub).has_edge(0, 1));
}

TEST_CASE("coordinates") {
  CHECK(format_coord(Coord(3, 4)) == "3/4");
  CHECK(format_coord(Coord(-2)) == "-2");
  CHECK(parse_coord("6/8") == Coord(3, 4));
  CHECK_THROWS_AS(parse_coord("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_coord("x"), ValidationError);
  auto n = normalized(model_of({{-10, 40}, {3, 5}}));
  CHECK(n.left(0) == Coord(0));
  CHECK(n.right(0) == Coord(3));
}
