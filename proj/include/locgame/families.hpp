#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locgame/error.hpp"
#include "locgame/graph.hpp"

// Deterministic generators for the graph families used throughout. Every
// family publishes a fixed vertex numbering so callers and tests can name
// vertices:
//   path(n):      0 - 1 - ... - n-1
//   cycle(n):     0 - 1 - ... - n-1 - 0
//   star(n):      K_{1,n}; center 0, leaves 1..n
//   multipartite: parts in the given order, vertices numbered block by block
//   mary(m,h):    breadth-first by level; children of v are m*v+1 .. m*v+m
//   hypercube(d): vertex id equals its binary label
//   product(G,H): (u,a) -> u*|H| + a
//   grid(r,c):    row-major, (i,j) -> i*c + j
//   random_tree:  seeded Pruefer sequence decode
//   spider3():    fixed 13-vertex tree: a root with three branches, each a
//                 2-edge path whose end carries two leaves; numbered
//                 breadth-first (root 0; 1,2,3; 4,5,6; leaves 7..12)

namespace locgame {

inline Graph path_graph(int n) {
  if (n < 1) throw error(errc::bad_params, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw error(errc::bad_params, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, e);
}

inline Graph star_graph(int leaves) {
  if (leaves < 1) throw error(errc::bad_params, "star needs >= 1 leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.size() < 2)
    throw error(errc::bad_params, "multipartite needs >= 2 parts");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw error(errc::bad_params, "part sizes must be >= 1");
    n += p;
  }
  std::vector<int> part_of(n);
  int v = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) part_of[v++] = int(i);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (part_of[u] != part_of[w]) e.push_back({u, w});
  return Graph(n, e);
}

inline int mary_tree_size(int m, int h) {
  int64_t size = 1, level = 1;
  for (int i = 0; i < h; ++i) {
    level *= m;
    size += level;
    if (size > (1 << 24)) throw error(errc::bad_params, "m-ary tree too large");
  }
  return int(size);
}

// Perfect m-ary tree of height h. Level i holds m^i vertices, all at
// distance i from root 0.
inline Graph perfect_mary_tree(int m, int h) {
  if (m < 1 || h < 0) throw error(errc::bad_params, "need m >= 1, h >= 0");
  int n = mary_tree_size(m, h);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({(v - 1) / m, v});
  return Graph(n, e);
}

inline Graph hypercube_graph(int d) {
  if (d < 1 || d > 20) throw error(errc::bad_params, "need 1 <= d <= 20");
  int n = 1 << d;
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b) {
      int v = u ^ (1 << b);
      if (u < v) e.push_back({u, v});
    }
  return Graph(n, e);
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
  int nh = h.n();
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    for (int a = 0; a < nh; ++a) e.push_back({u * nh + a, v * nh + a});
  for (auto [a, b] : h.edges())
    for (int u = 0; u < g.n(); ++u) e.push_back({u * nh + a, u * nh + b});
  return Graph(g.n() * nh, e);
}

inline Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw error(errc::bad_params, "grid needs r,c >= 1");
  return cartesian_product(path_graph(rows), path_graph(cols));
}

// Seeded random labeled tree via Pruefer decode; identical (n, seed) pairs
// produce identical edge sets.
inline Graph random_tree(int n, uint64_t seed) {
  if (n < 1) throw error(errc::bad_params, "tree needs n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = int(rng() % uint64_t(n));
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<Edge> e;
  // smallest-leaf decode
  std::vector<bool> used(n, false);
  for (int x : pruefer) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    e.push_back({std::min(leaf, x), std::max(leaf, x)});
    used[leaf] = true;
    --deg[x];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
  e.push_back({a, b});
  return Graph(n, e);
}

struct Interval {
  double lo = 0, hi = 0;
};

inline Graph intersection_graph(const std::vector<Interval>& iv) {
  if (iv.empty()) throw error(errc::bad_params, "no intervals");
  int n = int(iv.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    if (iv[i].lo > iv[i].hi) throw error(errc::bad_params, "interval lo > hi");
    for (int j = i + 1; j < n; ++j)
      if (iv[i].lo <= iv[j].hi && iv[j].lo <= iv[i].hi) e.push_back({i, j});
  }
  return Graph(n, e);  // throws errc::disconnected when intervals split
}

// Seeded random connected interval system; integer endpoints keep the
// output printable and exactly reproducible.
inline std::vector<Interval> random_intervals(int n, uint64_t seed) {
  if (n < 1) throw error(errc::bad_params, "need n >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Interval> iv(n);
    for (auto& i : iv) {
      int lo = int(rng() % uint64_t(2 * n));
      int len = 1 + int(rng() % uint64_t(n));
      i = {double(lo), double(lo + len)};
    }
    try {
      intersection_graph(iv);
      return iv;
    } catch (const error&) {
      continue;
    }
  }
  throw error(errc::bad_params, "could not sample a connected interval system");
}

inline Graph spider3_graph() {
  std::vector<Edge> e = {{0, 1}, {0, 2},  {0, 3},  {1, 4},  {2, 5},  {3, 6},
                         {4, 7}, {4, 8},  {5, 9},  {5, 10}, {6, 11}, {6, 12}};
  return Graph(13, e);
}

}  // namespace locgame
