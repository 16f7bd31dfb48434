#pragma once

#include <vector>

#include "locgame/bitset.hpp"
#include "locgame/error.hpp"
#include "locgame/graph.hpp"

namespace locgame {

// Maps every vertex to a vertex of a distinguished subgraph; identity on the
// subgraph itself.
struct Retraction {
  std::vector<int> map;
};

namespace detail {

// Components of G after deleting the edges induced inside H. comp[v] gets a
// component id; returns component count.
inline int components_without_induced_edges(const Graph& g, const VertexSet& h,
                                            std::vector<int>& comp) {
  comp.assign(g.n(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (comp[v] >= 0) continue;
        if (h.test(u) && h.test(v)) continue;  // induced edge removed
        comp[v] = next;
        stack.push_back(v);
      }
    }
    ++next;
  }
  return next;
}

inline bool induced_connected(const Graph& g, const VertexSet& h) {
  int start = h.first();
  if (start < 0) return false;
  VertexSet seen(g.n());
  seen.set(start);
  std::vector<int> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!h.test(v) || seen.test(v)) continue;
      seen.set(v);
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == h.count();
}

}  // namespace detail

// H is special when G[H] is connected and, after deleting the edges of G[H]
// from G, every component contains exactly one vertex of H. Equivalently,
// every path between distinct H-vertices stays inside H.
inline bool is_special_subgraph(const Graph& g, const VertexSet& h) {
  if (h.empty()) throw error(errc::bad_params, "empty subgraph");
  if (!detail::induced_connected(g, h)) return false;
  std::vector<int> comp;
  int k = detail::components_without_induced_edges(g, h, comp);
  std::vector<int> h_count(k, 0);
  h.for_each([&](int v) { ++h_count[comp[v]]; });
  for (int c = 0; c < k; ++c)
    if (h_count[c] != 1) return false;
  return true;
}

// For special H: each vertex maps to the unique H-vertex of its component in
// G minus the edges of G[H]. Satisfies d(u,v) = d(u,f(u)) + d(f(u),v) for
// every u outside H and v inside H.
inline Retraction special_retraction(const Graph& g, const VertexSet& h) {
  if (!is_special_subgraph(g, h))
    throw error(errc::bad_params, "subgraph is not special");
  std::vector<int> comp;
  int k = detail::components_without_induced_edges(g, h, comp);
  std::vector<int> anchor(k, -1);
  h.for_each([&](int v) { anchor[comp[v]] = v; });
  Retraction r;
  r.map.resize(g.n());
  for (int v = 0; v < g.n(); ++v) r.map[v] = h.test(v) ? v : anchor[comp[v]];
  return r;
}

// Relabels the vertices in keep (ascending order keeps numbering stable) and
// returns the induced subgraph; fails when the induced graph is disconnected.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> idx(g.n(), -1);
  std::vector<int> verts = keep.to_vector();
  for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = int(i);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (idx[u] >= 0 && idx[v] >= 0) e.push_back({idx[u], idx[v]});
  return Graph(int(verts.size()), e);
}

}  // namespace locgame
