#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "helpers.hpp"
#include "locgame/families.hpp"
#include "locgame/game.hpp"

using namespace locgame;

TEST_CASE("star partition by the center") {
  Graph g = star_graph(3);
  ProbeOutcome out = partition_by_distance(g, VertexSet::full(4), {0});
  REQUIRE(out.classes.size() == 2);
  CHECK(out.classes[0].distances == std::vector<int>{0});
  CHECK(out.classes[0].members.to_vector() == std::vector<int>{0});
  CHECK(out.classes[1].distances == std::vector<int>{1});
  CHECK(out.classes[1].members.count() == 3);
}

TEST_CASE("Fano point probes pin every line vertex") {
  Graph g = testutil::fano_heawood();
  // points 1,4,6 of the classical labeling are vertices 0,3,5
  ProbeOutcome out = partition_by_distance(g, VertexSet::full(14), {0, 3, 5});
  for (const auto& c : out.classes) {
    bool has_line_vertex = false;
    c.members.for_each([&](int v) { has_line_vertex |= v >= 7; });
    if (has_line_vertex) CHECK(c.members.count() == 1);
  }
}

TEST_CASE("grid corner pair resolves everything") {
  Graph g = grid_graph(8, 8);
  ProbeOutcome out = partition_by_distance(g, VertexSet::full(64), {0, 7});
  CHECK(out.classes.size() == 64);
  CHECK(out.all_singletons());
}

TEST_CASE("spread is the union of closed neighborhoods") {
  Graph p4 = path_graph(4);
  CHECK(spread(p4, VertexSet::of(4, {1})).to_vector() ==
        std::vector<int>{0, 1, 2});

  Graph star = star_graph(4);
  VertexSet leaves = VertexSet::of(5, {1, 2, 3, 4});
  CHECK(spread(star, leaves).count() == 5);

  Graph c4 = cycle_graph(4);
  CHECK(spread(c4, VertexSet::of(4, {1, 3})).count() == 4);
}

TEST_CASE("monotone spread") {
  Graph g = testutil::random_connected_graph(9, 0.3, 11);
  for (uint64_t seed = 0; seed < 12; ++seed) {
    VertexSet c(g.n());
    std::mt19937_64 rng(seed);
    for (int reps = 0; reps < 3; ++reps) c.set(int(rng() % uint64_t(g.n())));
    VertexSet s1 = spread(g, c);
    VertexSet s2 = spread(g, s1);
    CHECK(c.is_subset_of(s1));
    CHECK(s1.is_subset_of(s2));
  }
}

TEST_CASE("step captures singleton states with any probe") {
  Graph g = grid_graph(3, 3);
  KnowledgeState s{VertexSet::of(9, {4}), Phase::pre_probe};
  for (int v = 0; v < 9; ++v)
    CHECK(std::holds_alternative<Captured>(step(g, s, {v})));
}

TEST_CASE("step on star leaves") {
  Graph g = star_graph(3);
  KnowledgeState s{VertexSet::of(4, {1, 2, 3}), Phase::pre_probe};
  StepResult r = step(g, s, {1});
  auto& succ = std::get<std::vector<KnowledgeState>>(r);
  REQUIRE(succ.size() == 1);
  CHECK(succ[0].candidates.to_vector() == std::vector<int>{0, 2, 3});
}

TEST_CASE("Fano double probe captures") {
  Graph g = testutil::fano_heawood();
  KnowledgeState all{VertexSet::full(14), Phase::pre_probe};
  StepResult r1 = step(g, all, {0, 3, 5});
  auto& succ = std::get<std::vector<KnowledgeState>>(r1);
  REQUIRE_FALSE(succ.empty());
  for (const auto& s : succ) {
    StepResult r2 = step(g, s, {1, 2, 4});  // points 2,3,5
    CHECK(std::holds_alternative<Captured>(r2));
  }
}

TEST_CASE("partition matches a naive grouping oracle") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = testutil::random_connected_graph(4 + int(seed % 9), 0.35, seed);
    std::mt19937_64 rng(seed ^ 0xabcd);
    VertexSet s(g.n());
    for (int reps = 0; reps < g.n() / 2 + 1; ++reps)
      s.set(int(rng() % uint64_t(g.n())));
    ProbeSet probe;
    for (int v = 0; v < g.n(); v += 2) probe.push_back(v);

    std::map<std::vector<int>, std::vector<int>> oracle;
    s.for_each([&](int v) {
      std::vector<int> key;
      for (int u : probe) key.push_back(g.dist(u, v));
      oracle[key].push_back(v);
    });

    ProbeOutcome out = partition_by_distance(g, s, probe);
    REQUIRE(out.classes.size() == oracle.size());
    VertexSet cover(g.n());
    for (const auto& c : out.classes) {
      CHECK(oracle.at(c.distances) == c.members.to_vector());
      CHECK_FALSE(cover.intersects(c.members));  // pairwise disjoint
      cover |= c.members;
    }
    CHECK(cover == s);  // classes cover the probed set
  }
}

TEST_CASE("step never returns an empty successor list") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = testutil::random_connected_graph(7, 0.3, seed);
    KnowledgeState s{VertexSet::full(g.n()), Phase::pre_probe};
    StepResult r = step(g, s, {0, 1});
    if (auto* succ = std::get_if<std::vector<KnowledgeState>>(&r))
      CHECK_FALSE(succ->empty());
  }
}

TEST_CASE("a probe on the robber vertex isolates it") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = testutil::random_connected_graph(8, 0.3, seed * 3);
    VertexSet s = VertexSet::full(g.n());
    for (int v = 0; v < g.n(); ++v) {
      ProbeOutcome out = partition_by_distance(g, s, {v, (v + 1) % g.n()});
      for (const auto& c : out.classes)
        if (c.members.test(v)) CHECK(c.members.count() == 1);
    }
  }
}

TEST_CASE("probe validation") {
  Graph g = path_graph(4);
  CHECK_THROWS_AS(partition_by_distance(g, VertexSet::full(4), {0, 0}), error);
  CHECK_THROWS_AS(partition_by_distance(g, VertexSet::full(4), {9}), error);
  CHECK_THROWS_AS(partition_by_distance(g, VertexSet::full(4), {}), error);
  KnowledgeState post{VertexSet::full(4), Phase::post_probe};
  CHECK_THROWS_AS(step(g, post, {0}), error);
}
