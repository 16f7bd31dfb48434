#pragma once

#include <random>
#include <vector>

#include "locgame/designs.hpp"
#include "locgame/families.hpp"
#include "locgame/graph.hpp"

namespace testutil {

// The Fano plane with its classical labeling: points 1..7 stored 0-indexed,
// lines {123,174,165,246,275,345,376}. Its incidence graph is the Heawood
// graph with points 0..6 and lines 7..13.
inline std::vector<std::vector<int>> fano_lines() {
  return {{0, 1, 2}, {0, 6, 3}, {0, 5, 4}, {1, 3, 5},
          {1, 6, 4}, {2, 3, 4}, {2, 6, 5}};
}

inline locgame::Graph fano_heawood() {
  return locgame::incidence_graph_from_lines(7, fano_lines());
}

// Seeded random connected graph: G(n, p) resampled until connected.
inline locgame::Graph random_connected_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<locgame::Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) e.push_back({u, v});
    try {
      return locgame::Graph(n, e);
    } catch (const locgame::error&) {
      continue;
    }
  }
  // a path always works as the fallback
  return locgame::path_graph(n);
}

// Seeded random connected subtree of a tree, grown from a random start.
inline std::vector<int> random_subtree(const locgame::Graph& tree, int size,
                                       uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> verts{int(rng() % uint64_t(tree.n()))};
  std::vector<char> in(tree.n(), 0);
  in[verts[0]] = 1;
  while (int(verts.size()) < size) {
    std::vector<int> frontier;
    for (int v : verts)
      for (int w : tree.neighbors(v))
        if (!in[w]) frontier.push_back(w);
    if (frontier.empty()) break;
    int pick = frontier[rng() % frontier.size()];
    in[pick] = 1;
    verts.push_back(pick);
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

}  // namespace testutil
