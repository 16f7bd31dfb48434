#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "locgame/families.hpp"
#include "locgame/graph.hpp"

// Seeded sampling helpers shared by the verification suite and the tests.
// Everything here is deterministic in its seed.

namespace locgame {

// G(n, p) resampled until connected.
inline Graph random_connected_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) e.push_back({u, v});
    try {
      return Graph(n, e);
    } catch (const error&) {
      continue;
    }
  }
  return path_graph(n);
}

// Random connected subtree vertex set, grown from a random start vertex.
inline std::vector<int> random_subtree(const Graph& tree, int size,
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
    std::sort(frontier.begin(), frontier.end());
    int pick = frontier[rng() % frontier.size()];
    in[pick] = 1;
    verts.push_back(pick);
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

namespace detail {

// canonical rooted-subtree encoding ("(" children ")") for isomorphism tests
inline std::string canonical_code(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.push_back(canonical_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

inline std::vector<int> tree_centroids(const Graph& t) {
  int n = t.n();
  std::vector<int> size(n, 1), order, parent(n, -1);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  std::vector<int> centroids;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int w : t.neighbors(v))
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    if (heaviest <= n / 2) centroids.push_back(v);
  }
  return centroids;
}

}  // namespace detail

inline std::string canonical_tree_code(const Graph& t) {
  if (t.n() == 1) return "()";
  std::string best;
  for (int c : detail::tree_centroids(t)) {
    std::string code = detail::canonical_code(t, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

// Every tree on exactly n vertices, one representative per isomorphism
// class, enumerated by decoding all Pruefer sequences.
inline std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1, {}));
    return out;
  }
  if (n == 2) {
    out.push_back(Graph(2, {{0, 1}}));
    return out;
  }
  std::map<std::string, bool> seen;
  long total = 1;
  for (int i = 0; i < n - 2; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<int> pruefer(n - 2);
    for (int i = 0; i < n - 2; ++i) {
      pruefer[i] = int(c % n);
      c /= n;
    }
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<Edge> e;
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
    e.push_back({std::min(a, b), std::max(a, b)});
    Graph t(n, e);
    std::string key = canonical_tree_code(t);
    if (seen.emplace(key, true).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace locgame
