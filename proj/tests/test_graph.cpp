#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "locgame/families.hpp"
#include "locgame/graph.hpp"

using namespace locgame;

TEST_CASE("single edge") {
  Graph g(2, {{0, 1}});
  CHECK(g.dist(0, 1) == 1);
  CHECK(g.m() == 1);
}

TEST_CASE("path distances") {
  Graph g = path_graph(4);
  CHECK(g.dist(0, 3) == 3);
  CHECK(g.dist(1, 3) == 2);
}

TEST_CASE("Heawood graph from the Fano incidence list") {
  Graph g = testutil::fano_heawood();
  REQUIRE(g.n() == 14);
  for (int v = 0; v < 14; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.diameter() == 3);
  CHECK(girth(g) == 6);
}

TEST_CASE("construction rejects bad input with distinct codes") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const error& e) {
      return e.code();
    }
    return errc::bad_params;
  };
  CHECK(code_of([] { Graph(3, {{0, 0}, {0, 1}, {1, 2}}); }) == errc::loop_edge);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}, {1, 2}}); }) ==
        errc::duplicate_edge);
  CHECK(code_of([] { Graph(4, {{0, 1}, {2, 3}}); }) == errc::disconnected);
  CHECK(code_of([] { Graph(2, {{0, 5}}); }) == errc::bad_vertex);
}

TEST_CASE("distance matrix properties on generated graphs") {
  std::vector<Graph> graphs;
  graphs.push_back(path_graph(9));
  graphs.push_back(cycle_graph(8));
  graphs.push_back(star_graph(6));
  graphs.push_back(perfect_mary_tree(3, 2));
  graphs.push_back(hypercube_graph(4));
  graphs.push_back(grid_graph(5, 4));
  graphs.push_back(complete_multipartite({2, 3}));
  graphs.push_back(testutil::fano_heawood());
  for (uint64_t seed : {1u, 2u, 3u}) graphs.push_back(random_tree(9, seed));

  for (const Graph& g : graphs) {
    REQUIRE(g.n() <= 64);
    for (int u = 0; u < g.n(); ++u) {
      CHECK(g.dist(u, u) == 0);
      for (int v = 0; v < g.n(); ++v) {
        CHECK(g.dist(u, v) == g.dist(v, u));
        CHECK((g.dist(u, v) == 1) == g.adjacent(u, v));
        for (int w = 0; w < g.n(); ++w)
          CHECK(g.dist(u, w) <= g.dist(u, v) + g.dist(v, w));
      }
    }
  }
}

TEST_CASE("edge list round trip") {
  Graph g = grid_graph(3, 3);
  std::stringstream ss;
  write_edge_list(g, ss);
  Graph h = read_edge_list(ss);
  CHECK(h.n() == g.n());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list parser reports line numbers") {
  auto message_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of("2 1\n0 zero\n").find("line 2") != std::string::npos);
  CHECK(message_of("2 1\n1 0\n").find("line 2") != std::string::npos);  // u<v
  CHECK(message_of("nope\n").find("line 1") != std::string::npos);
  CHECK(message_of("3 2\n0 1\n").find("expected 2 edges") != std::string::npos);
}
