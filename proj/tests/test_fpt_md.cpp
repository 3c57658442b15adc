#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ivc/decomposition.hpp"
#include "ivc/fpt_md.hpp"
#include "ivc/generators.hpp"
#include "support.hpp"

using namespace ivc;
using ivc::testing::model_of;

TEST_CASE("bound") {
  CHECK(bag_size_bound(0) == 1);
  CHECK(bag_size_bound(1) == 28);
  CHECK(bag_size_bound(2) == 87);
}

TEST_CASE("path of ten") {
  auto res = fpt_metric_dimension(path_model(10), 1);
  REQUIRE(res.size);
  CHECK(*res.size == 1);
  CHECK(res.witness.size() == 1);
  CHECK(is_resolving(build_graph(path_model(10)), res.witness));
  CHECK_FALSE(fpt_metric_dimension(path_model(10), 0).size);
}

TEST_CASE("cliques and k = 0") {
  CHECK(fpt_metric_dimension(clique_model(1), 0).size == 0);
  CHECK(fpt_metric_dimension(clique_model(6), 5).size == 5);
  auto short_budget = fpt_metric_dimension(clique_model(6), 4);
  CHECK_FALSE(short_budget.size);
  CHECK_FALSE(short_budget.early_reject);
  auto rejected = fpt_metric_dimension(clique_model(29), 1);
  CHECK(rejected.early_reject);
  CHECK_FALSE(rejected.size);
  CHECK(fpt_metric_dimension(clique_model(3), 0).early_reject);
}

TEST_CASE("disconnected models") {
  // two edges and two isolated intervals: 1 + 1 + (2 - 1)
  auto m = model_of({{0, 2}, {1, 3}, {5, 7}, {6, 8}, {10, 11}, {12, 13}});
  auto res = fpt_metric_dimension(m, 6);
  REQUIRE(res.size);
  CHECK(*res.size == 3);
  CHECK(is_resolving(build_graph(m), res.witness));
  CHECK(brute_force_min(build_graph(m), ProblemKind::MD, 6).size() == 3);
  CHECK_FALSE(fpt_metric_dimension(m, 2).size);
}

TEST_CASE("leaf") {
  auto m = path_model(3);
  MdProgram one(m, 1);
  one.leaf(0);
  auto views = one.configurations();
  REQUIRE(views.size() == 2);
  std::vector<int> counts{views[0].count, views[1].count};
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<int>{0, 1});

  MdProgram zero(m, 0);
  zero.leaf(0);
  REQUIRE(zero.configuration_count() == 1);
  CHECK(zero.configurations()[0].solution.empty());
}

TEST_CASE("introduce") {
  // all three intervals share a point
  auto m = clique_model(3);
  MdProgram prog(m, 3);
  prog.leaf(0);
  prog.introduce(1);
  prog.introduce(2);
  CHECK(prog.pair_count() == 3);
  for (const auto& c : prog.configurations()) {
    bool has2 = std::find(c.solution.begin(), c.solution.end(), 2) != c.solution.end();
    if (has2) {
      CHECK(c.sep.at({0, 2}) >= 1);
      CHECK(c.sep.at({1, 2}) >= 1);
    }
  }

  // budget of one: no configuration holds two solution vertices
  MdProgram tight(m, 1);
  tight.leaf(0);
  tight.introduce(1);
  CHECK(tight.configuration_count() == 3);
  for (const auto& c : tight.configurations()) CHECK(c.solution.size() <= 1);
}

TEST_CASE("strict-left separation") {
  // x = [0,2] ends before [3,7] and [5,9] start, at distances 2 and 3
  auto m = model_of({{0, 2}, {1, 4}, {3, 7}, {5, 9}, {6, 10}});
  auto d = all_pairs_distances(build_graph(m));
  REQUIRE(d(0, 2) != d(0, 3));
  MdProgram prog(m, 5);
  prog.leaf(0);
  for (VertexId v = 1; v < 5; ++v) prog.introduce(v);
  int seen = 0;
  for (const auto& c : prog.configurations())
    if (c.solution == std::vector<VertexId>{0}) {
      CHECK(c.sep.at({2, 3}) == 2);
      CHECK(c.sep.at({1, 2}) == 1);
      ++seen;
    }
  CHECK(seen == 1);
}

TEST_CASE("forget discards pairs that can no longer be separated") {
  // 1 and 2 are nested in 0 and share their rightmost step 0; only 1 or 2 separates them
  auto m = model_of({{0, 10}, {1, 3}, {2, 4}, {9, 12}});
  auto g = build_graph(m);
  MdProgram prog(m, 2);
  prog.leaf(0);
  prog.introduce(1);
  prog.introduce(2);
  prog.introduce(3);
  prog.forget(1);
  REQUIRE(prog.configuration_count() > 0);
  for (const auto& c : prog.configurations()) CHECK(c.count >= 1);
  auto res = fpt_metric_dimension(m, 4);
  REQUIRE(res.size);
  CHECK(*res.size == brute_force_min(g, ProblemKind::MD, 4).size());
}

TEST_CASE("oracle equivalence on random models") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 12);
    auto m = ivc::testing::random_any(n, seed);
    auto g = build_graph(m);
    auto oracle = brute_force_min(g, ProblemKind::MD, n);
    REQUIRE(oracle.found());
    CAPTURE(seed);
    FptOptions opts;
    opts.cross_check = true;
    auto res = fpt_metric_dimension(m, std::min(n, 6), opts);
    if (oracle.size() <= 6) {
      REQUIRE(res.size);
      CHECK(*res.size == oracle.size());
      CHECK(is_resolving(g, res.witness));
      CHECK(res.witness.size() == *res.size);
    } else {
      CHECK_FALSE(res.size);
    }
    if (oracle.size() > 1) CHECK_FALSE(fpt_metric_dimension(m, oracle.size() - 1).size);
  }
}

TEST_CASE("threads do not change results") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto m = ivc::testing::random_any(30, seed);
    FptOptions one, four;
    four.threads = 4;
    auto a = fpt_metric_dimension(m, 4, one);
    auto b = fpt_metric_dimension(m, 4, four);
    CHECK(a.size == b.size);
    CHECK(a.witness == b.witness);
    CHECK(a.peak_configurations == b.peak_configurations);
  }
}

TEST_CASE("witness validity on larger models") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto m = random_model(150, seed, ModelStyle::LongThin, 2);
    auto res = fpt_metric_dimension(m, 150);
    CHECK(res.size);
    if (res.size) {
      CHECK(is_resolving(build_graph(m), res.witness));
      CHECK(is_distance2_resolving(build_graph(m), res.witness));
    }
  }
}

TEST_CASE("configuration count stays within the state bound") {
  auto m = random_model(30, 3, ModelStyle::Uniform);
  auto comps = model_components(m);
  for (const auto& c : comps) {
    if (c.size() < 2) continue;
    auto sub = submodel(m, c);
    MdProgram prog(sub, 4);
    for (const auto& e : build_path_decomposition(power_model(sub, 4)).events) {
      if (e.kind == EventKind::Leaf) prog.leaf(e.vertex);
      else if (e.kind == EventKind::Introduce) prog.introduce(e.vertex);
      else prog.forget(e.vertex);
      const double b = static_cast<double>(prog.bag().size());
      CHECK(std::log(static_cast<double>(prog.configuration_count()) + 1) <= 2 * b * b * std::log(3.0) + 1e-9);
    }
  }
}

TEST_CASE("disconnected program is rejected") {
  CHECK_THROWS_AS(MdProgram(model_of({{0, 1}, {2, 3}}), 2), std::invalid_argument);
}

TEST_CASE("trace rows") {
  std::ostringstream trace;
  FptOptions opts;
  opts.trace = &trace;
  fpt_metric_dimension(path_model(5), 2, opts);
  std::istringstream in(trace.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "event,kind,vertex,bag,pairs,configs");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 10);
}
