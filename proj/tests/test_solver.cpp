#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "locgame/families.hpp"
#include "locgame/solver.hpp"

using namespace locgame;

namespace {

// Independent witness check: play the recorded probes through the game rules
// against every robber class choice and report the worst round count.
int replay_witness(const Graph& g, const SolveResult& res, const VertexSet& s) {
  const ProbeSet& probe = res.witness.at(s);
  ProbeOutcome out = partition_by_distance(g, s, probe);
  int worst = 1;
  for (const auto& c : out.classes)
    if (c.members.count() >= 2)
      worst = std::max(worst, 1 + replay_witness(g, res, spread(g, c.members)));
  return worst;
}

int capt(const Graph& g, int k,
         ProbeUniverse u = ProbeUniverse::all_vertices,
         SolveEngine e = SolveEngine::auto_select) {
  SolveResult r = solve_capture_time(g, k, SolveBudget{}, u, e);
  REQUIRE(r.outcome == SolveOutcome::finite);
  return r.capture_time;
}

}  // namespace

TEST_CASE("star capture time with one cop is n-1") {
  for (int n = 2; n <= 6; ++n) CHECK(capt(star_graph(n), 1) == n - 1);
}

TEST_CASE("three-branch spider: one cop captures in three rounds") {
  Graph h = spider3_graph();
  CHECK(capt(h, 1) == 3);
  LocalizationResult loc = localization_number(h);
  CHECK(loc.zeta == 1);
}

TEST_CASE("one cop loses on the 4-cycle") {
  Graph c4 = cycle_graph(4);
  SolveResult r = solve_capture_time(c4, 1);
  CHECK(r.outcome == SolveOutcome::robber_wins);

  // hand-enumerated oracle: every 1-probe leaves a distance-1 pair whose
  // spread is the whole cycle, so the full set is the only reachable state
  for (int v = 0; v < 4; ++v) {
    StepResult sr = step(c4, {VertexSet::full(4), Phase::pre_probe}, {v});
    auto& succ = std::get<std::vector<KnowledgeState>>(sr);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].candidates == VertexSet::full(4));
  }
}

TEST_CASE("two cops resolve the 4-cycle in one round") {
  Graph c4 = cycle_graph(4);
  CHECK(is_resolving(c4, {0, 1}));
  LocalizationResult loc = localization_number(c4);
  CHECK(loc.zeta == 2);
  CHECK(loc.per_k[0].second.outcome == SolveOutcome::robber_wins);
  CHECK(loc.per_k[1].second.capture_time == 1);
}

TEST_CASE("Heawood graph: three cops capture in two rounds") {
  SolveResult r = solve_capture_time(testutil::fano_heawood(), 3);
  REQUIRE(r.outcome == SolveOutcome::finite);
  CHECK(r.capture_time == 2);
}

TEST_CASE("metric dimension basics") {
  MetricDimensionResult p5 = metric_dimension(path_graph(5));
  CHECK(p5.beta == 1);
  CHECK(p5.witness == ProbeSet{0});

  MetricDimensionResult star = metric_dimension(star_graph(3));
  CHECK(star.beta == 2);
  CHECK(star.witness == ProbeSet{1, 2});

  CHECK(is_resolving(hypercube_graph(3), {0, 1, 2, 4}));
  CHECK_FALSE(is_resolving(star_graph(3), {0}));

  Graph grid = grid_graph(8, 8);
  CHECK(is_resolving(grid, {0, 7}));
  ProbeSet all;
  for (int v = 0; v < grid.n(); ++v) all.push_back(v);
  CHECK(is_resolving(grid, all));
}

TEST_CASE("temporal speed-up: capture time non-increasing in cops") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = testutil::random_connected_graph(7, 0.35, seed * 17);
    MetricDimensionResult md = metric_dimension(g);
    LocalizationResult loc = localization_number(g);
    REQUIRE(loc.zeta >= 1);
    CHECK(loc.zeta <= md.beta);
    int prev = INT_MAX;
    for (int k = loc.zeta; k <= md.beta; ++k) {
      int t = capt(g, k);
      CHECK(t <= prev);
      prev = t;
    }
    CHECK(capt(g, md.beta) == 1);
  }
}

TEST_CASE("witness replay reproduces the reported capture time") {
  std::vector<std::pair<Graph, int>> cases = {
      {star_graph(4), 1},
      {spider3_graph(), 1},
      {path_graph(6), 2},
      {random_tree(8, 3), 2},
      {testutil::random_connected_graph(7, 0.4, 9), 2},
  };
  for (const auto& [g, k] : cases) {
    SolveResult r = solve_capture_time(g, k);
    if (r.outcome != SolveOutcome::finite) continue;
    REQUIRE(r.witness.count(VertexSet::full(g.n())) == 1);
    CHECK(replay_witness(g, r, VertexSet::full(g.n())) == r.capture_time);
  }
}

TEST_CASE("trees have localization number 1 or 2") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    Graph t = random_tree(4 + int(seed), seed * 31);
    LocalizationResult loc = localization_number(t);
    CHECK((loc.zeta == 1 || loc.zeta == 2));
  }
}

TEST_CASE("capture time is monotone on subtrees") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    Graph t = random_tree(8, seed * 7);
    for (int k = 2; k <= 3; ++k) {
      int whole = capt(t, k);
      for (int size = 2; size <= 6; size += 2) {
        auto verts = testutil::random_subtree(t, size, seed * 13 + size);
        Graph h = induced_subgraph(t, VertexSet::of(t.n(), verts));
        CHECK(capt(h, k) <= whole);
      }
    }
  }
}

TEST_CASE("star lower bound for trees") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Graph t = random_tree(8, seed * 5 + 1);
    int delta = t.max_degree();
    for (int k = 2; k < delta; ++k)
      CHECK(capt(t, k) >= (delta - 1 + k - 1) / k);
  }
}

TEST_CASE("deepening engine matches the explicit engine") {
  std::vector<std::pair<Graph, int>> cases = {
      {star_graph(5), 1},       {path_graph(7), 1},
      {path_graph(7), 2},       {spider3_graph(), 1},
      {spider3_graph(), 2},     {random_tree(9, 2), 2},
      {random_tree(9, 4), 3},   {grid_graph(2, 3), 2},
      {perfect_mary_tree(2, 2), 2},
  };
  for (const auto& [g, k] : cases) {
    SolveResult a = solve_capture_time(g, k, SolveBudget{},
                                       ProbeUniverse::all_vertices,
                                       SolveEngine::explicit_iteration);
    if (a.outcome != SolveOutcome::finite) continue;
    SolveResult b = solve_capture_time(g, k, SolveBudget{},
                                       ProbeUniverse::all_vertices,
                                       SolveEngine::deepening);
    REQUIRE(b.outcome == SolveOutcome::finite);
    CHECK(a.capture_time == b.capture_time);
  }
}

TEST_CASE("leaf-restricted solving matches unrestricted on trees") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Graph t = random_tree(7, seed * 11);
    CHECK(capt(t, 2) == capt(t, 2, ProbeUniverse::leaves_only));
  }
}

TEST_CASE("m-ary capture time brackets, small sample") {
  struct Case {
    int m, h, k;
  };
  for (Case c : {Case{3, 1, 2}, Case{3, 2, 2}, Case{2, 2, 2}, Case{2, 2, 3}}) {
    Graph t = perfect_mary_tree(c.m, c.h);
    int v = capt(t, c.k, ProbeUniverse::leaves_only);
    if (c.k < c.m) {
      CHECK(v >= c.h * ((c.m - 1) / c.k));
      CHECK(v <= c.h * ((c.m - 1 + c.k - 1) / c.k));
    } else {
      int i = 0;
      for (long long p = c.m; p <= c.k; p *= c.m) ++i;
      CHECK(v * (1 + i) >= c.h);
      CHECK(v <= (c.h + i - 1) / i);
    }
  }
}

TEST_CASE("budget aborts are explicit") {
  SolveBudget tiny;
  tiny.max_probe_evals = 5;
  SolveResult r = solve_capture_time(grid_graph(3, 3), 2, tiny);
  CHECK(r.outcome == SolveOutcome::aborted);
  CHECK_FALSE(r.abort_reason.empty());

  SolveBudget shallow;
  shallow.max_rounds = 1;
  SolveResult r2 = solve_capture_time(star_graph(5), 1, shallow);
  CHECK(r2.outcome == SolveOutcome::aborted);
}

TEST_CASE("single-vertex graph needs zero rounds") {
  SolveResult r = solve_capture_time(Graph(1, {}), 1);
  CHECK(r.outcome == SolveOutcome::finite);
  CHECK(r.capture_time == 0);
}
