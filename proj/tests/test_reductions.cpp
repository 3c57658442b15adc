#include <doctest.h>

#include "claims.hpp"
#include "ivc/errors.hpp"
#include "ivc/reductions.hpp"
#include "support.hpp"

using namespace ivc;

namespace {

const GadgetKind kAllKinds[] = {GadgetKind::P4LD, GadgetKind::P5ID, GadgetKind::P6OLD};

ThreeDMInstance instance(int n, std::vector<Triple> triples) { return {n, std::move(triples)}; }

int diameter(const Graph& g) {
  auto d = all_pairs_distances(g);
  int best = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) best = std::max(best, d(a, b));
  return best;
}

}  // namespace

TEST_CASE("dominating gadgets") {
  for (auto kind : kAllKinds) {
    auto gd = dominating_gadget(kind);
    CAPTURE(to_string(kind));
    CHECK(gd.order == gd.d + 2);
    CHECK(build_graph(gd.model()) == gd.graph());
    auto best = brute_force_min(gd.graph(), gd.problem, gd.order);
    REQUIRE(best.found());
    CHECK(best.size() == gd.d);
    CHECK(static_cast<int>(gd.standard.size()) == gd.d);
    CHECK(satisfies(gd.graph(), gd.problem, gd.standard_set()));
    CHECK(no_vertex_dominated_by_all(gd.graph(), gd.standard_set()));
  }
  CHECK(dominating_gadget(GadgetKind::P4LD).standard == std::vector<VertexId>{0, 3});
  CHECK(dominating_gadget(GadgetKind::P5ID).standard == std::vector<VertexId>{0, 2, 4});
  // the middle four vertices of P6; {x1,x3,x4,x6} leaves x1 without a neighbour in the set
  CHECK(dominating_gadget(GadgetKind::P6OLD).standard == std::vector<VertexId>{1, 2, 3, 4});
  CHECK_FALSE(no_vertex_dominated_by_all(dominating_gadget(GadgetKind::P4LD).graph(), VertexSet(4, {1, 2})));
  CHECK(parse_gadget_kind("id") == GadgetKind::P5ID);
  CHECK(parse_gadget_kind("p6-old") == GadgetKind::P6OLD);
  CHECK_THROWS_AS(parse_gadget_kind("md"), ValidationError);
}

TEST_CASE("3DM instances") {
  auto inst = instance(2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 0}});
  CHECK_NOTHROW(inst.validate());
  CHECK(inst.is_perfect_matching({0, 1}));
  CHECK_FALSE(inst.is_perfect_matching({0, 2}));
  CHECK_FALSE(inst.is_perfect_matching({0}));
  CHECK_FALSE(inst.is_perfect_matching({0, 0}));
  CHECK_FALSE(inst.is_perfect_matching({0, 7}));
  CHECK_THROWS_AS(instance(2, {}).validate(), ValidationError);
  CHECK_THROWS_AS(instance(2, {{0, 2, 0}}).validate(), ValidationError);
  CHECK_THROWS_AS(instance(0, {{0, 0, 0}}).validate(), ValidationError);
}

TEST_CASE("size formulas") {
  CHECK(reduction_order(GadgetKind::P4LD, 1, 1) == 177);
  CHECK(reduction_solution_size(GadgetKind::P4LD, 1, 1) == 72);
  CHECK(reduction_order(GadgetKind::P5ID, 1, 1) == 209);
  CHECK(reduction_solution_size(GadgetKind::P5ID, 1, 1) == 104);
  CHECK(reduction_order(GadgetKind::P6OLD, 2, 3) == 3 * 217 + 48);
}

TEST_CASE("single triple, every gadget kind") {
  auto inst = instance(1, {{0, 0, 0}});
  for (auto kind : kAllKinds) {
    auto out = build_reduction(inst, kind);
    auto gd = dominating_gadget(kind);
    CAPTURE(to_string(kind));
    CHECK(out.model.size() == out.expected_order);
    CHECK(out.roles.size() == static_cast<std::size_t>(out.model.size()));
    CHECK(out.gadgets.size() == 3u + 29u);
    CHECK(out.transmitters.size() == 5u);
    CHECK(out.choice_pairs.size() == 4u + 10u + 3u);
    CHECK(out.triple_tight[0].size() == static_cast<std::size_t>(29 * gd.d + 7));
    CHECK(out.triple_nontight[0].size() == static_cast<std::size_t>(29 * gd.d + 8));
    auto s = standard_solution(out, inst, {0});
    CHECK(s.size() == out.expected_solution_size);
    CHECK(satisfies(build_graph(out.model), gd.problem, s));
  }
}

TEST_CASE("two elements, three triples") {
  auto inst = instance(2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 0}});
  auto out = build_reduction(inst, GadgetKind::P4LD);
  CHECK(out.model.size() == reduction_order(GadgetKind::P4LD, 2, 3));
  auto s = standard_solution(out, inst, {0, 1});
  CHECK(s.size() == reduction_solution_size(GadgetKind::P4LD, 2, 3));
  CHECK(is_locating_dominating(build_graph(out.model), s));
  CHECK_THROWS_AS(standard_solution(out, inst, {0, 2}), ValidationError);

  auto id = build_reduction(inst, GadgetKind::P5ID);
  CHECK(is_identifying(build_graph(id.model), standard_solution(id, inst, {1, 0})));
}

TEST_CASE("tight standards everywhere miss the element pairs") {
  // all triples tight: the element choice pairs are left unseparated
  auto inst = instance(1, {{0, 0, 0}});
  auto out = build_reduction(inst, GadgetKind::P4LD);
  VertexSet s(out.model.size());
  for (VertexId v : out.triple_tight[0]) s.insert(v);
  for (VertexId v : out.element_standard) s.insert(v);
  CHECK(s.size() == out.expected_solution_size - 1);
  auto violation = first_violation(build_graph(out.model), Criterion::LocatingDominating, s);
  REQUIRE(violation);
  CHECK(out.roles[violation->u].rfind('A', 0) == 0);
}

TEST_CASE("order formula on random instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 4);
    ThreeDMInstance inst{n, {}};
    for (int i = 0; i < m; ++i)
      inst.triples.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    auto kind = kAllKinds[trial % 3];
    auto out = build_reduction(inst, kind);
    CHECK(out.model.size() == reduction_order(kind, n, m));
    CHECK(out.expected_solution_size == reduction_solution_size(kind, n, m));
  }
}

TEST_CASE("audits catch a broken layout") {
  auto out = build_reduction(instance(1, {{0, 0, 0}}), GadgetKind::P4LD);
  auto g = build_graph(out.model);
  CHECK(audit_gadgets(out).empty());
  CHECK(audit_choice_pairs(out, g).empty());
  auto broken = out;
  broken.choice_pairs[0].separators.pop_back();
  CHECK_FALSE(audit_choice_pairs(broken, g).empty());
  // cut one gadget: drop its last member from the audited list and add an outsider
  auto cut = out;
  cut.gadgets[0].pop_back();
  CHECK_FALSE(audit_gadgets(cut).empty());
}

TEST_CASE("transmitter host") {
  for (auto kind : kAllKinds) {
    auto host = transmitter_host(kind);
    auto gd = dominating_gadget(kind);
    CAPTURE(to_string(kind));
    CHECK(host.model.size() == host.expected_order);
    REQUIRE(host.transmitters.size() == 1u);
    CHECK(host.transmitters[0].vertices().size() == static_cast<std::size_t>(7 + 5 * gd.order));
    const auto& parts = host.transmitters[0];
    std::size_t sdom = 5 * static_cast<std::size_t>(gd.d);
    CHECK(host.triple_tight[0].size() == 2 * gd.d + sdom + 1);
    CHECK(host.triple_nontight[0].size() == 2 * gd.d + sdom + 2);
    CHECK(std::count(host.triple_tight[0].begin(), host.triple_tight[0].end(), parts.v) == 1);
    CHECK(ivc::testing::check_local_bounds(host).empty());
    auto mins = ivc::testing::local_minima(host);
    for (int m : mins.gadgets) CHECK(m == gd.d);
    // with the outside in S, LD and OLD bounds are attained; ID needs u for X
    CHECK(mins.transmitters[0] == 5 * gd.d + (kind == GadgetKind::P5ID ? 2 : 1));
    CHECK(mins.separating[0] == 5 * gd.d + 2);
  }
}

TEST_CASE("local lower bounds on a full reduction") {
  auto out = build_reduction(instance(1, {{0, 0, 0}}), GadgetKind::P4LD);
  CHECK(ivc::testing::check_local_bounds(out).empty());
}

TEST_CASE("roles and manifest") {
  auto out = build_reduction(instance(1, {{0, 0, 0}}), GadgetKind::P5ID);
  auto roles = roles_json(out);
  CHECK(roles.size() == static_cast<std::size_t>(out.model.size()));
  CHECK(roles["0"] == "A0.f");
  CHECK(roles[std::to_string(out.transmitters[0].u)] == "T0.Tr(p,q).u");
  auto manifest = manifest_json(out);
  CHECK(manifest["order"] == 209);
  CHECK(manifest["order_formula"] == 209);
  CHECK(manifest["solution_size_formula"] == 104);
  CHECK(manifest["gadget"] == "p5-id");
}

TEST_CASE("diameter-two transformations") {
  Graph k1(1);
  auto h = f1(k1);
  CHECK(h.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
  auto h2 = f2(k1);
  CHECK(h2.order() == 4);
  CHECK(h2.has_edge(3, 1));
  CHECK(h2.has_edge(3, 2));
  CHECK(h2.neighbors(3).size() == 2);
  auto h3 = f3(k1);
  CHECK(h3.order() == 5);
  CHECK(h3.has_edge(1, 2));
  CHECK_FALSE(h3.has_edge(3, 4));
  CHECK(h3.neighbors(3) == std::vector<VertexId>{1, 2});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = ivc::testing::random_graph(7, 0.2, seed);
    CHECK(diameter(f1(g)) <= 2);
    CHECK(diameter(f2(g)) <= 2);
    CHECK(diameter(f3(g)) <= 2);
  }
}

TEST_CASE("transformation equalities on a few graphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = ivc::testing::random_graph(6, 0.35, seed);
    const int n = g.order();
    auto ld = brute_force_min(g, ProblemKind::LD, n).size();
    CHECK(brute_force_min(f1(g), ProblemKind::LD, n + 2).size() == ld + 1);
    CHECK(brute_force_min(f3(g), ProblemKind::MD, n + 4).size() == ld + 2);
    if (!has_twins(g)) CHECK(brute_force_min(f1(g), ProblemKind::ID, n + 2).size() == brute_force_min(g, ProblemKind::ID, n).size() + 1);
    if (!has_open_twins(g) && brute_force_min(g, ProblemKind::OLD, n).found())
      CHECK(brute_force_min(f2(g), ProblemKind::OLD, n + 3).size() == brute_force_min(g, ProblemKind::OLD, n).size() + 2);
  }
}
