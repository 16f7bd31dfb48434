#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "locgame/error.hpp"
#include "locgame/graph.hpp"

namespace locgame {

// Finite projective plane of order q: q^2+q+1 points and lines, q+1 points
// per line, every point pair on exactly one line, every line pair meeting in
// exactly one point, and a quadrilateral (four points, no three collinear).
struct ProjectivePlane {
  int q = 0;
  std::vector<std::vector<int>> lines;  // each line: sorted point ids

  int num_points() const { return q * q + q + 1; }
};

struct PlaneCheck {
  bool ok = true;
  std::string violation;  // first violated requirement, empty when ok
};

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Coordinate construction over the integers mod a prime q: points and lines
// are the nonzero triples normalized so the first nonzero coordinate is 1;
// point P lies on line L iff their dot product vanishes mod q. Triples are
// enumerated as (1,a,b), then (0,1,c), then (0,0,1), in lexicographic order
// of (a,b) and c.
inline ProjectivePlane build_pg2(int q) {
  if (!is_prime(q))
    throw error(errc::bad_params,
                "order must be prime, got " + std::to_string(q));
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) triples.push_back({1, a, b});
  for (int c = 0; c < q; ++c) triples.push_back({0, 1, c});
  triples.push_back({0, 0, 1});

  ProjectivePlane p;
  p.q = q;
  for (const auto& line : triples) {
    std::vector<int> pts;
    for (size_t i = 0; i < triples.size(); ++i) {
      const auto& pt = triples[i];
      int dot = pt[0] * line[0] + pt[1] * line[1] + pt[2] * line[2];
      if (dot % q == 0) pts.push_back(int(i));
    }
    std::sort(pts.begin(), pts.end());
    p.lines.push_back(std::move(pts));
  }
  return p;
}

inline PlaneCheck check_plane(const ProjectivePlane& p) {
  auto fail = [](std::string why) { return PlaneCheck{false, std::move(why)}; };
  int q = p.q;
  if (q < 2) return fail("order must be >= 2");
  int n = q * q + q + 1;
  if (int(p.lines.size()) != n)
    return fail("expected " + std::to_string(n) + " lines, got " +
                std::to_string(p.lines.size()));
  std::vector<int> point_deg(n, 0);
  for (const auto& line : p.lines) {
    if (int(line.size()) != q + 1) return fail("line size != q+1");
    for (int pt : line) {
      if (pt < 0 || pt >= n) return fail("point id out of range");
      ++point_deg[pt];
    }
  }
  for (int pt = 0; pt < n; ++pt)
    if (point_deg[pt] != q + 1) return fail("point not on exactly q+1 lines");

  // every pair of points on exactly one common line
  std::vector<int> pair_count(size_t(n) * n, 0);
  for (const auto& line : p.lines)
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j)
        ++pair_count[size_t(line[i]) * n + line[j]];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (pair_count[size_t(a) * n + b] != 1)
        return fail("point pair (" + std::to_string(a) + "," +
                    std::to_string(b) + ") on " +
                    std::to_string(pair_count[size_t(a) * n + b]) + " lines");

  // every pair of lines meets in exactly one point
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> common;
      std::set_intersection(p.lines[a].begin(), p.lines[a].end(),
                            p.lines[b].begin(), p.lines[b].end(),
                            std::back_inserter(common));
      if (common.size() != 1)
        return fail("line pair (" + std::to_string(a) + "," +
                    std::to_string(b) + ") meets in " +
                    std::to_string(common.size()) + " points");
    }

  // quadrilateral: two lines meeting at z plus two extra points from each
  // give four points with no three collinear
  for (int a = 0; a < n && true; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> common;
      std::set_intersection(p.lines[a].begin(), p.lines[a].end(),
                            p.lines[b].begin(), p.lines[b].end(),
                            std::back_inserter(common));
      if (common.size() != 1) continue;
      int z = common[0];
      std::vector<int> pa, pb;
      for (int pt : p.lines[a])
        if (pt != z) pa.push_back(pt);
      for (int pt : p.lines[b])
        if (pt != z) pb.push_back(pt);
      if (pa.size() >= 2 && pb.size() >= 2) return PlaneCheck{};
    }
  }
  return fail("no quadrilateral (four points, no three collinear)");
}

inline bool validate_plane(const ProjectivePlane& p) { return check_plane(p).ok; }

// Bipartite incidence graph: point vertices 0..q^2+q, then line vertices
// q^2+q+1..2(q^2+q+1)-1 in the plane's line order.
inline Graph incidence_graph(const ProjectivePlane& p) {
  PlaneCheck c = check_plane(p);
  if (!c.ok) throw error(errc::bad_params, "invalid plane: " + c.violation);
  int n = p.num_points();
  std::vector<Edge> e;
  for (size_t li = 0; li < p.lines.size(); ++li)
    for (int pt : p.lines[li]) e.push_back({pt, n + int(li)});
  return Graph(2 * n, e);
}

// Incidence graph straight from an explicit line table (no plane validation);
// handy for pinning a specific labeling in tests.
inline Graph incidence_graph_from_lines(int num_points,
                                        const std::vector<std::vector<int>>& lines) {
  std::vector<Edge> e;
  for (size_t li = 0; li < lines.size(); ++li)
    for (int pt : lines[li]) {
      if (pt < 0 || pt >= num_points)
        throw error(errc::bad_vertex, "point id out of range");
      e.push_back({pt, num_points + int(li)});
    }
  return Graph(num_points + int(lines.size()), e);
}

// The Fano plane in its classical labeling: points 1..7 stored 0-indexed,
// lines {123, 174, 165, 246, 275, 345, 376}.
inline std::vector<std::vector<int>> classical_fano_lines() {
  return {{0, 1, 2}, {0, 6, 3}, {0, 5, 4}, {1, 3, 5},
          {1, 6, 4}, {2, 3, 4}, {2, 6, 5}};
}

// The Heawood graph as the incidence graph of the classical Fano labeling:
// points 0..6, lines 7..13.
inline Graph heawood_graph() {
  return incidence_graph_from_lines(7, classical_fano_lines());
}

// Shortest cycle length (graphs here are small; BFS from every vertex).
inline int girth(const Graph& g) {
  int best = -1;
  std::vector<int> dist(g.n()), parent(g.n());
  for (int s = 0; s < g.n(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::vector<int> q{s};
    dist[s] = 0;
    for (size_t head = 0; head < q.size(); ++head) {
      int u = q[head];
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<int> q{0};
  color[0] = 0;
  for (size_t head = 0; head < q.size(); ++head) {
    int u = q[head];
    for (int v : g.neighbors(u)) {
      if (color[v] < 0) {
        color[v] = color[u] ^ 1;
        q.push_back(v);
      } else if (color[v] == color[u]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace locgame
