#include <catch2/catch_amalgamated.hpp>

#include "locgame/families.hpp"

using namespace locgame;

TEST_CASE("perfect m-ary tree shape") {
  Graph g = perfect_mary_tree(2, 2);
  CHECK(g.n() == 7);
  CHECK(g.leaves().size() == 4);
  // breadth-first numbering: children of v are m*v+1 .. m*v+m
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(1, 4));
  CHECK(g.adjacent(2, 5));
  CHECK(g.adjacent(2, 6));

  Graph t73 = perfect_mary_tree(7, 3);
  CHECK(t73.n() == 400);
  CHECK(t73.leaves().size() == 343);
}

TEST_CASE("three-branch spider") {
  Graph g = spider3_graph();
  CHECK(g.n() == 13);
  CHECK(g.max_degree() == 3);
  CHECK(g.leaves().size() == 6);
  CHECK(g.is_tree());
}

TEST_CASE("grid") {
  Graph g = grid_graph(8, 8);
  CHECK(g.n() == 64);
  CHECK(g.diameter() == 14);
  // row-major numbering
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 8));
  CHECK_FALSE(g.adjacent(7, 8));
}

TEST_CASE("star") {
  Graph g = star_graph(5);
  CHECK(g.n() == 6);
  CHECK(g.degree(0) == 5);
  for (int v = 1; v <= 5; ++v) CHECK(g.degree(v) == 1);
}

TEST_CASE("hypercube") {
  Graph g = hypercube_graph(3);
  CHECK(g.n() == 8);
  for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.dist(0, 7) == 3);  // labels differ in all three bits
}

TEST_CASE("complete multipartite") {
  Graph g = complete_multipartite({2, 3});
  CHECK(g.n() == 5);
  CHECK(g.m() == 6);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.adjacent(0, 2));
}

TEST_CASE("cartesian product matches grid") {
  Graph a = cartesian_product(path_graph(2), path_graph(3));
  Graph b = grid_graph(2, 3);
  CHECK(a.edges() == b.edges());
}

TEST_CASE("random tree determinism") {
  Graph a = random_tree(10, 42);
  Graph b = random_tree(10, 42);
  Graph c = random_tree(10, 43);
  CHECK(a.edges() == b.edges());
  CHECK(a.is_tree());
  CHECK(c.is_tree());
  CHECK(a.edges() != c.edges());
}

TEST_CASE("random intervals are connected and reproducible") {
  auto iv1 = random_intervals(8, 7);
  auto iv2 = random_intervals(8, 7);
  REQUIRE(iv1.size() == iv2.size());
  for (size_t i = 0; i < iv1.size(); ++i) {
    CHECK(iv1[i].lo == iv2[i].lo);
    CHECK(iv1[i].hi == iv2[i].hi);
  }
  Graph g = intersection_graph(iv1);
  CHECK(g.n() == 8);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(perfect_mary_tree(0, 2), error);
  CHECK_THROWS_AS(perfect_mary_tree(2, -1), error);
  CHECK_THROWS_AS(cycle_graph(2), error);
  CHECK_THROWS_AS(complete_multipartite({3}), error);
}
