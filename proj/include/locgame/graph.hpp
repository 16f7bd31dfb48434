#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "locgame/bitset.hpp"
#include "locgame/error.hpp"

namespace locgame {

using Edge = std::pair<int, int>;

// Simple undirected connected graph with eagerly computed all-pairs hop
// distances. Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n) {
    if (n <= 0) throw error(errc::bad_params, "vertex count must be positive");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw error(errc::bad_vertex, "endpoint out of range: (" +
                                          std::to_string(u) + "," +
                                          std::to_string(v) + ")");
      if (u == v)
        throw error(errc::loop_edge, "loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second)
        throw error(errc::duplicate_edge, "duplicate edge (" +
                                              std::to_string(u) + "," +
                                              std::to_string(v) + ")");
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    compute_distances();
  }

  int n() const { return n_; }
  int m() const { return int(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const { return int(adj_[v].size()); }

  int dist(int u, int v) const { return dist_[size_t(u) * n_ + v]; }
  const int* dist_row(int u) const { return dist_.data() + size_t(u) * n_; }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int diameter() const {
    int d = 0;
    for (size_t i = 0; i < dist_.size(); ++i) d = std::max(d, dist_[i]);
    return d;
  }

  bool is_tree() const { return m() == n_ - 1; }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (degree(v) == 1) out.push_back(v);
    return out;
  }

  // Union of closed neighborhoods over the set.
  VertexSet closed_neighborhood(const VertexSet& s) const {
    VertexSet out = s;
    s.for_each([&](int v) {
      for (int u : adj_[v]) out.set(u);
    });
    return out;
  }

 private:
  void compute_distances() {
    dist_.assign(size_t(n_) * n_, -1);
    std::vector<int> queue(n_);
    for (int s = 0; s < n_; ++s) {
      int* row = dist_.data() + size_t(s) * n_;
      row[s] = 0;
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        int u = queue[head++];
        for (int v : adj_[u]) {
          if (row[v] < 0) {
            row[v] = row[u] + 1;
            queue[tail++] = v;
          }
        }
      }
      if (tail < n_)
        throw error(errc::disconnected,
                    "graph is disconnected (vertex " + std::to_string(s) +
                        " reaches only " + std::to_string(tail) + " of " +
                        std::to_string(n_) + " vertices)");
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> dist_;
};

inline Graph build_graph(const std::vector<Edge>& edges, int n) {
  return Graph(n, edges);
}

// Edge-list text format: first line "n m", then m lines "u v" with
// 0-indexed endpoints and u < v. Malformed lines are rejected with their
// line number.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw error(errc::parse_error, "empty input");
  long n = 0, m = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra))
      throw error(errc::parse_error,
                  "line " + std::to_string(lineno) + ": expected 'n m'");
  }
  if (n <= 0 || m < 0)
    throw error(errc::parse_error,
                "line " + std::to_string(lineno) + ": bad counts");
  std::vector<Edge> edges;
  edges.reserve(size_t(m));
  for (long i = 0; i < m; ++i) {
    if (!next_line())
      throw error(errc::parse_error, "expected " + std::to_string(m) +
                                         " edges, got " + std::to_string(i));
    std::istringstream ss(line);
    long u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      throw error(errc::parse_error,
                  "line " + std::to_string(lineno) + ": expected 'u v'");
    if (u >= v)
      throw error(errc::parse_error,
                  "line " + std::to_string(lineno) + ": expected u < v");
    edges.push_back({int(u), int(v)});
  }
  return Graph(int(n), edges);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace locgame
