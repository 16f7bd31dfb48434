#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "locgame/bitset.hpp"
#include "locgame/error.hpp"
#include "locgame/families.hpp"
#include "locgame/graph.hpp"

namespace locgame {

enum class DecompKind { tree, path };

// Bags over a tree (or path) of bag indices. Valid when the bags cover every
// vertex, every edge fits inside some bag, and the bags containing any fixed
// vertex induce a subtree (running intersection).
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;         // sorted vertex lists
  std::vector<std::pair<int, int>> tree_edges;  // bag-index pairs
  DecompKind kind = DecompKind::tree;

  int num_bags() const { return int(bags.size()); }

  std::vector<std::vector<int>> bag_adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
  }
};

struct TdCheck {
  bool ok = true;
  std::string violation;
};

inline TdCheck check_td(const Graph& g, const TreeDecomposition& td) {
  auto fail = [](std::string why) { return TdCheck{false, std::move(why)}; };
  int nb = td.num_bags();
  if (nb == 0) return fail("no bags");
  for (const auto& bag : td.bags)
    for (int v : bag)
      if (v < 0 || v >= g.n()) return fail("bag vertex out of range");
  for (auto [a, b] : td.tree_edges)
    if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
      return fail("bad bag edge");

  // bag edges form a tree
  if (int(td.tree_edges.size()) != nb - 1)
    return fail("bag edges do not form a tree (count)");
  {
    std::vector<int> comp(nb, -1);
    auto adj = td.bag_adjacency();
    std::vector<int> stack{0};
    comp[0] = 0;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (comp[v] < 0) {
          comp[v] = 0;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != nb) return fail("bag edges do not form a tree (connectivity)");
  }
  if (td.kind == DecompKind::path) {
    auto adj = td.bag_adjacency();
    for (int b = 0; b < nb; ++b)
      if (int(adj[b].size()) > 2) return fail("path decomposition has a branch");
  }

  // 1: every vertex in some bag
  std::vector<char> covered(g.n(), 0);
  for (const auto& bag : td.bags)
    for (int v : bag) covered[v] = 1;
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v])
      return fail("vertex " + std::to_string(v) + " not in any bag");

  // 2: every edge inside some bag
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& bag : td.bags)
      if (std::binary_search(bag.begin(), bag.end(), u) &&
          std::binary_search(bag.begin(), bag.end(), v)) {
        found = true;
        break;
      }
    if (!found)
      return fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") in no bag");
  }

  // 3: bags containing each vertex induce a connected subtree
  auto adj = td.bag_adjacency();
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> with;
    for (int b = 0; b < nb; ++b)
      if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), v))
        with.push_back(b);
    if (with.empty()) continue;
    std::set<int> remaining(with.begin(), with.end());
    std::vector<int> stack{with[0]};
    remaining.erase(with[0]);
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : adj[b])
        if (remaining.count(c)) {
          remaining.erase(c);
          stack.push_back(c);
        }
    }
    if (!remaining.empty())
      return fail("bags containing vertex " + std::to_string(v) +
                  " are not connected");
  }
  return TdCheck{};
}

inline bool validate_td(const Graph& g, const TreeDecomposition& td) {
  return check_td(g, td).ok;
}

struct TdStats {
  int width = 0;
  int radius = 0;
  int center_bag = 0;  // least index among bags of minimum eccentricity
  int leaf_count = 0;  // degree <= 1 bags; 1 for a single bag
};

inline TdStats td_stats(const TreeDecomposition& td) {
  TdStats st;
  for (const auto& bag : td.bags)
    st.width = std::max(st.width, int(bag.size()) - 1);
  int nb = td.num_bags();
  auto adj = td.bag_adjacency();
  if (nb == 1) {
    st.radius = 0;
    st.center_bag = 0;
    st.leaf_count = 1;
    return st;
  }
  int best_ecc = -1, best_bag = 0;
  for (int s = 0; s < nb; ++s) {
    std::vector<int> dist(nb, -1);
    std::vector<int> q{s};
    dist[s] = 0;
    int ecc = 0;
    for (size_t head = 0; head < q.size(); ++head) {
      int u = q[head];
      ecc = std::max(ecc, dist[u]);
      for (int v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
    }
    if (best_ecc < 0 || ecc < best_ecc) {
      best_ecc = ecc;
      best_bag = s;
    }
  }
  st.radius = best_ecc;
  st.center_bag = best_bag;
  for (int b = 0; b < nb; ++b)
    if (adj[b].size() <= 1) ++st.leaf_count;
  return st;
}

// Min-fill elimination ordering: repeatedly eliminate the vertex whose
// neighborhood needs the fewest fill edges (ties to the least index), then
// turn its closed neighborhood into a bag. Bag i attaches to the bag of the
// earliest-eliminated remaining neighbor. Width is an upper bound on the
// treewidth, exact on trees and chordal inputs.
inline TreeDecomposition minfill_td(const Graph& g) {
  int n = g.n();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> gone(n, 0);
  std::vector<int> order, position(n, -1);
  std::vector<std::vector<int>> elim_nbrs(n);

  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
        for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
          if (!adj[*it].count(*jt)) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    order.push_back(best);
    position[best] = step;
    elim_nbrs[best].assign(adj[best].begin(), adj[best].end());
    for (int a : elim_nbrs[best])
      for (int b : elim_nbrs[best])
        if (a < b && !adj[a].count(b)) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
    for (int a : elim_nbrs[best]) adj[a].erase(best);
    gone[best] = 1;
  }

  TreeDecomposition td;
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    td.bags[i] = elim_nbrs[v];
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
  }
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int parent = -1;
    for (int u : elim_nbrs[v])
      if (parent < 0 || position[u] < position[parent]) parent = u;
    if (parent >= 0) td.tree_edges.push_back({i, position[parent]});
  }
  td.kind = DecompKind::tree;
  return td;
}

// Interval intersection graph together with its clique-path decomposition:
// one bag per maximal clique, swept by right endpoint.
inline std::pair<Graph, TreeDecomposition> interval_clique_path(
    const std::vector<Interval>& iv) {
  Graph g = intersection_graph(iv);  // rejects empty and disconnected input
  int n = g.n();
  std::vector<int> by_right(n);
  for (int i = 0; i < n; ++i) by_right[i] = i;
  std::stable_sort(by_right.begin(), by_right.end(), [&](int a, int b) {
    return iv[a].hi < iv[b].hi;
  });
  std::vector<std::vector<int>> bags;
  for (int i : by_right) {
    std::vector<int> bag;
    for (int j = 0; j < n; ++j)
      if (iv[j].lo <= iv[i].hi && iv[i].hi <= iv[j].hi) bag.push_back(j);
    std::sort(bag.begin(), bag.end());
    bags.push_back(std::move(bag));
  }
  // keep maximal cliques only, in sweep order, dropping duplicates
  std::vector<std::vector<int>> kept;
  for (const auto& bag : bags) {
    bool drop = false;
    for (const auto& k : kept)
      if (k == bag) {
        drop = true;
        break;
      }
    if (!drop)
      for (const auto& other : bags)
        if (other.size() > bag.size() &&
            std::includes(other.begin(), other.end(), bag.begin(), bag.end())) {
          drop = true;
          break;
        }
    if (!drop) kept.push_back(bag);
  }
  TreeDecomposition td;
  td.bags = std::move(kept);
  td.kind = DecompKind::path;
  for (int b = 0; b + 1 < int(td.bags.size()); ++b)
    td.tree_edges.push_back({b, b + 1});
  return {std::move(g), std::move(td)};
}

// The natural width-1 decomposition of a tree: one bag per edge. Bags of
// edges below a vertex hang off the bag of the edge above it; the top-level
// bags chain off the first child's bag.
inline TreeDecomposition tree_edge_td(const Graph& g) {
  if (!g.is_tree()) throw error(errc::not_a_tree, "need a tree");
  TreeDecomposition td;
  if (g.n() == 1) {
    td.bags = {{0}};
    return td;
  }
  std::vector<int> parent(g.n(), -1), bag_of(g.n(), -1);
  std::vector<int> bfs{0};
  parent[0] = 0;
  for (size_t head = 0; head < bfs.size(); ++head) {
    int u = bfs[head];
    for (int v : g.neighbors(u))
      if (parent[v] < 0) {
        parent[v] = u;
        bag_of[v] = int(td.bags.size());
        td.bags.push_back({std::min(u, v), std::max(u, v)});
        bfs.push_back(v);
      }
  }
  int hub = bag_of[g.neighbors(0)[0]];
  for (int v = 1; v < g.n(); ++v) {
    if (parent[v] == 0) {
      if (bag_of[v] != hub) td.tree_edges.push_back({bag_of[v], hub});
    } else {
      td.tree_edges.push_back({bag_of[v], bag_of[parent[v]]});
    }
  }
  td.kind = DecompKind::tree;
  return td;
}

}  // namespace locgame
