#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locgame/decomposition.hpp"
#include "locgame/designs.hpp"
#include "locgame/error.hpp"
#include "locgame/game.hpp"
#include "locgame/graph.hpp"
#include "locgame/strategy.hpp"

namespace locgame {

// ---------------------------------------------------------------- scripted

// Plays a fixed probe list in order; once the list runs out the evaluation
// is abandoned (reported as Exceeded).
class ScriptedProbes : public CopStrategy {
 public:
  explicit ScriptedProbes(std::vector<ProbeSet> probes)
      : probes_(std::move(probes)) {
    if (probes_.empty()) throw error(errc::bad_params, "empty probe script");
    for (const auto& p : probes_)
      cops_ = std::max(cops_, int(p.size()));
  }

  std::string name() const override { return "scripted"; }
  int cop_count() const override { return cops_; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    struct Inst : StrategyInstance {
      const ScriptedProbes* s;
      std::unique_ptr<StrategyInstance> clone() const override {
        return std::make_unique<Inst>(*this);
      }
      std::optional<ProbeSet> next_probe(const Graph&, const KnowledgeState&,
                                         int round) override {
        if (round > int(s->probes_.size())) return std::nullopt;
        return s->probes_[round - 1];
      }
    };
    auto i = std::make_unique<Inst>();
    i->s = this;
    return i;
  }

 private:
  std::vector<ProbeSet> probes_;
  int cops_ = 0;
};

// ------------------------------------------------------------- leaf probes

// One cop per leaf, all probed every round. On a tree every vertex lies on
// a shortest leaf-to-leaf path, so the full leaf vector pins the robber in
// the first round.
class LeafProbeAll : public CopStrategy {
 public:
  explicit LeafProbeAll(const Graph& g) {
    if (!g.is_tree()) throw error(errc::not_a_tree, "leaf probing needs a tree");
    leaves_ = g.leaves();
    if (leaves_.size() < 2)
      throw error(errc::bad_params, "need a tree with at least 2 leaves");
  }

  std::string name() const override { return "leaf_probe_all"; }
  int cop_count() const override { return int(leaves_.size()); }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    struct Inst : StrategyInstance {
      ProbeSet leaves;
      std::unique_ptr<StrategyInstance> clone() const override {
        return std::make_unique<Inst>(*this);
      }
      std::optional<ProbeSet> next_probe(const Graph&, const KnowledgeState&,
                                         int) override {
        return leaves;
      }
    };
    auto i = std::make_unique<Inst>();
    i->leaves = leaves_;
    return i;
  }

 private:
  std::vector<int> leaves_;
};

// ------------------------------------------------------------ two-cop tree

// Anchor-and-scan on a tree: one cop holds an anchor vertex (so the robber
// can never pass it unseen), the other probes neighbors to find the branch
// holding the robber; the anchor then advances into that branch. Captures
// any tree with two cops.
class TreeTwoCop : public CopStrategy {
 public:
  explicit TreeTwoCop(const Graph& g) {
    if (!g.is_tree()) throw error(errc::not_a_tree, "need a tree");
    if (g.n() < 2) throw error(errc::bad_params, "need n >= 2");
  }

  std::string name() const override { return "tree_two_cop"; }
  int cop_count() const override { return 2; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    auto i = std::make_unique<Inst>();
    i->anchor = 0;
    return i;
  }

 private:
  struct Inst : StrategyInstance {
    int anchor = 0;
    std::set<int> scanned;

    std::unique_ptr<StrategyInstance> clone() const override {
      return std::make_unique<Inst>(*this);
    }

    // x lies in the branch of tree-minus-anchor rooted at neighbor w.
    static bool in_branch(const Graph& g, int anchor, int w, int x) {
      return x != anchor && g.dist(anchor, x) == 1 + g.dist(w, x);
    }

    std::optional<ProbeSet> next_probe(const Graph& g,
                                       const KnowledgeState& state,
                                       int) override {
      std::vector<int> cand = state.candidates.to_vector();
      if (cand.size() == 1) return ProbeSet{cand[0]};

      while (true) {
        // branches of tree-minus-anchor that still hold candidates
        std::vector<int> live;
        for (int w : g.neighbors(anchor)) {
          for (int x : cand)
            if (in_branch(g, anchor, w, x)) {
              live.push_back(w);
              break;
            }
        }
        bool anchored = state.candidates.test(anchor);
        if (live.empty()) return ProbeSet{anchor};  // candidates = {anchor}
        if (live.size() == 1 && !anchored) {
          anchor = live[0];  // advance toward the lone branch
          scanned.clear();
          continue;
        }
        if (live.size() == 1) return ProbeSet{anchor, live[0]};
        for (int w : live)
          if (!scanned.count(w)) {
            scanned.insert(w);
            return ProbeSet{anchor, w};
          }
        return std::nullopt;  // every live branch scanned yet none identified
      }
    }
  };
};

// --------------------------------------------------- perfect m-ary helpers

namespace detail {

struct MaryShape {
  int m = 0, h = 0, n = 0;

  MaryShape(int m_, int h_) : m(m_), h(h_), n(mary_tree_size(m_, h_)) {}

  int parent(int v) const { return (v - 1) / m; }

  int depth(int v) const {
    int d = 0;
    while (v != 0) {
      v = parent(v);
      ++d;
    }
    return d;
  }

  bool in_subtree(int v, int root) const {
    while (v >= root) {
      if (v == root) return true;
      v = parent(v);
    }
    return false;
  }

  std::vector<int> children(int v) const {
    std::vector<int> out;
    for (int j = 1; j <= m; ++j) {
      int c = m * v + j;
      if (c < n) out.push_back(c);
    }
    return out;
  }

  // all descendants of root at exactly the given relative depth
  std::vector<int> level_below(int root, int rel_depth) const {
    std::vector<int> cur{root};
    for (int d = 0; d < rel_depth; ++d) {
      std::vector<int> next;
      for (int v : cur)
        for (int c : children(v)) next.push_back(c);
      cur = std::move(next);
    }
    return cur;
  }

  void validate_graph(const Graph& g) const {
    if (g.n() != n || !g.is_tree())
      throw error(errc::bad_params, "graph is not the expected m-ary tree");
    for (int v = 1; v < n; ++v)
      if (!g.adjacent(v, parent(v)))
        throw error(errc::bad_params, "graph does not use m-ary numbering");
  }
};

}  // namespace detail

// --------------------------------------------------------- m-ary, few cops

// Fewer cops than branching: scan the current root's child subtrees in
// batches of k until the robber's subtree is identified, then descend.
// Worst case h * ceil((m-1)/k) rounds.
class MaryLow : public CopStrategy {
 public:
  MaryLow(const Graph& g, int m, int h, int k) : shape_(m, h), k_(k) {
    if (k < 2 || k >= m) throw error(errc::bad_params, "need 2 <= k < m");
    shape_.validate_graph(g);
  }

  std::string name() const override { return "mary_low"; }
  int cop_count() const override { return k_; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    auto i = std::make_unique<Inst>();
    i->shape = &shape_;
    i->k = k_;
    return i;
  }

 private:
  struct Inst : StrategyInstance {
    const detail::MaryShape* shape = nullptr;
    int k = 0;
    int root = 0;
    int scanned = 0;  // children of root already probed

    std::unique_ptr<StrategyInstance> clone() const override {
      return std::make_unique<Inst>(*this);
    }

    std::optional<ProbeSet> next_probe(const Graph&,
                                       const KnowledgeState& state,
                                       int) override {
      std::vector<int> cand = state.candidates.to_vector();
      if (cand.size() == 1) return ProbeSet{cand[0]};

      // descend while every candidate other than the root sits in one child
      // subtree
      while (true) {
        std::vector<int> kids = shape->children(root);
        int hit = -1;
        bool clean = true;
        for (int x : cand) {
          if (x == root) continue;
          int owner = -1;
          for (int c : kids)
            if (shape->in_subtree(x, c)) {
              owner = c;
              break;
            }
          if (owner < 0 || (hit >= 0 && owner != hit)) {
            clean = false;
            break;
          }
          hit = owner;
        }
        if (clean && hit >= 0 && !state.candidates.test(root)) {
          root = hit;
          scanned = 0;
          continue;
        }
        break;
      }

      std::vector<int> kids = shape->children(root);
      if (kids.empty()) return ProbeSet{root};  // at a leaf
      int scannable = int(kids.size()) - 1;     // last child identified by elimination
      if (scanned >= scannable) return std::nullopt;  // identification overdue
      ProbeSet probe;
      int take = std::min(k, scannable - scanned);
      for (int j = 0; j < take; ++j) probe.push_back(kids[scanned + j]);
      scanned += take;
      if (probe.size() == 1) probe.push_back(kids[0]);  // keep two cops out
      return probe;
    }
  };

  detail::MaryShape shape_;
  int k_;
};

// -------------------------------------------------------- m-ary, many cops

// At least m cops: probe the full level floor(log_m k) below the current
// root. A shallow robber is pinned outright; a deep one betrays its branch
// and the game recurses that many levels down. Worst case
// ceil(h / floor(log_m k)) rounds.
class MaryHigh : public CopStrategy {
 public:
  MaryHigh(const Graph& g, int m, int h, int k) : shape_(m, h), k_(k) {
    shape_.validate_graph(g);
    if (k < m) throw error(errc::bad_params, "need k >= m");
    double cap = 1;
    for (int j = 0; j <= h; ++j) cap *= m;
    if (double(k) >= cap)
      throw error(errc::bad_params, "need k < m^(h+1)");
    double mi = 1;
    int i = 0;
    while (mi * m <= k) {
      mi *= m;
      ++i;
    }
    step_ = i;
  }

  std::string name() const override { return "mary_high"; }
  int cop_count() const override { return k_; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    auto i = std::make_unique<Inst>();
    i->shape = &shape_;
    i->step = step_;
    return i;
  }

 private:
  struct Inst : StrategyInstance {
    const detail::MaryShape* shape = nullptr;
    int step = 1;
    int root = 0;

    std::unique_ptr<StrategyInstance> clone() const override {
      return std::make_unique<Inst>(*this);
    }

    std::optional<ProbeSet> next_probe(const Graph&,
                                       const KnowledgeState& state,
                                       int) override {
      std::vector<int> cand = state.candidates.to_vector();
      if (cand.size() == 1) return ProbeSet{cand[0]};

      // descend while all candidates fit in one child subtree
      while (true) {
        int hit = -1;
        bool clean = true;
        for (int x : cand) {
          if (!shape->in_subtree(x, root)) return std::nullopt;
          if (x == root) {
            clean = false;
            break;
          }
          int owner = -1;
          for (int c : shape->children(root))
            if (shape->in_subtree(x, c)) {
              owner = c;
              break;
            }
          if (hit >= 0 && owner != hit) {
            clean = false;
            break;
          }
          hit = owner;
        }
        if (clean && hit >= 0) {
          root = hit;
          continue;
        }
        break;
      }

      int remaining = shape->h - shape->depth(root);
      int d = std::min(step, remaining);
      if (d == 0) return ProbeSet{root};
      return shape->level_below(root, d);
    }
  };

  detail::MaryShape shape_;
  int k_;
  int step_;
};

// ---------------------------------------------------------- pathwidth sweep

// Sweeps a path decomposition bag by bag. Each round probes the current bag
// except one vertex shared with the next bag, so swept territory stays
// sealed; the last bag is probed whole.
class PathwidthSweep : public CopStrategy {
 public:
  PathwidthSweep(const Graph& g, const TreeDecomposition& td) {
    TdCheck c = check_td(g, td);
    if (!c.ok)
      throw error(errc::invalid_decomposition, c.violation);
    if (td.kind != DecompKind::path)
      throw error(errc::invalid_decomposition, "need a path decomposition");
    order_ = path_order(td);
    width_ = td_stats(td).width;
    for (size_t t = 0; t < order_.size(); ++t) {
      const auto& bag = td.bags[order_[t]];
      ProbeSet probe = bag;
      if (t + 1 < order_.size() && bag.size() > 1) {
        const auto& next = td.bags[order_[t + 1]];
        for (int v : bag)
          if (std::binary_search(next.begin(), next.end(), v)) {
            probe.erase(std::find(probe.begin(), probe.end(), v));
            break;
          }
      }
      plan_.push_back(std::move(probe));
    }
  }

  std::string name() const override { return "pathwidth_sweep"; }
  int cop_count() const override { return width_ + 1; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    struct Inst : StrategyInstance {
      const PathwidthSweep* s;
      std::unique_ptr<StrategyInstance> clone() const override {
        return std::make_unique<Inst>(*this);
      }
      std::optional<ProbeSet> next_probe(const Graph&, const KnowledgeState&,
                                         int round) override {
        if (round > int(s->plan_.size())) return std::nullopt;
        return s->plan_[round - 1];
      }
    };
    auto i = std::make_unique<Inst>();
    i->s = this;
    return i;
  }

  const std::vector<ProbeSet>& plan() const { return plan_; }

 private:
  static std::vector<int> path_order(const TreeDecomposition& td) {
    int nb = td.num_bags();
    if (nb == 1) return {0};
    auto adj = td.bag_adjacency();
    int start = -1;
    for (int b = 0; b < nb; ++b)
      if (adj[b].size() == 1) {
        start = b;
        break;
      }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (int(order.size()) < nb) {
      int nxt = -1;
      for (int b : adj[cur])
        if (b != prev) nxt = b;
      prev = cur;
      cur = nxt;
      order.push_back(cur);
    }
    return order;
  }

  std::vector<int> order_;
  std::vector<ProbeSet> plan_;
  int width_ = 0;
};

// ------------------------------------------------------ complete k-partite

// Stationary cops blanket all but one vertex of every small part (and all
// but one singleton part); a single mover walks the largest part. Any move
// off the largest part is identified at once, so the mover corners the
// robber in at most |largest part| - 1 rounds.
class KPartiteStrategy : public CopStrategy {
 public:
  KPartiteStrategy(const Graph& g, const std::vector<int>& parts) {
    if (!std::is_sorted(parts.begin(), parts.end()))
      throw error(errc::bad_params, "part sizes must be ascending");
    if (parts.size() < 2 || parts.back() < 2)
      throw error(errc::bad_params, "largest part must have >= 2 vertices");
    int v = 0;
    std::vector<std::vector<int>> blocks;
    for (int sz : parts) {
      std::vector<int> blk;
      for (int j = 0; j < sz; ++j) blk.push_back(v++);
      blocks.push_back(std::move(blk));
    }
    if (v != g.n()) throw error(errc::bad_params, "part sizes do not sum to n");
    for (int a = 0; a < g.n(); ++a)
      for (int b = a + 1; b < g.n(); ++b) {
        bool same_block = false;
        for (const auto& blk : blocks)
          if (std::binary_search(blk.begin(), blk.end(), a) &&
              std::binary_search(blk.begin(), blk.end(), b))
            same_block = true;
        if (g.adjacent(a, b) == same_block)
          throw error(errc::bad_params, "graph is not this complete multipartite");
      }

    int rho = 0;
    for (int sz : parts)
      if (sz == 1) ++rho;
    // all but one vertex of each non-largest multi-vertex part
    for (int i = 0; i + 1 < int(blocks.size()); ++i) {
      const auto& blk = blocks[i];
      if (blk.size() == 1) continue;
      for (size_t j = 0; j + 1 < blk.size(); ++j) stationary_.push_back(blk[j]);
    }
    // all but one of the singleton parts (they come first in sorted order)
    for (int i = 0; i + 1 < rho; ++i) stationary_.push_back(blocks[i][0]);
    std::sort(stationary_.begin(), stationary_.end());
    mover_track_ = blocks.back();
  }

  std::string name() const override { return "kpartite"; }
  int cop_count() const override { return int(stationary_.size()) + 1; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    struct Inst : StrategyInstance {
      const KPartiteStrategy* s;
      std::unique_ptr<StrategyInstance> clone() const override {
        return std::make_unique<Inst>(*this);
      }
      std::optional<ProbeSet> next_probe(const Graph&, const KnowledgeState&,
                                         int round) override {
        if (round >= int(s->mover_track_.size())) return std::nullopt;
        ProbeSet p = s->stationary_;
        p.push_back(s->mover_track_[round - 1]);
        return p;
      }
    };
    auto i = std::make_unique<Inst>();
    i->s = this;
    return i;
  }

 private:
  std::vector<int> stationary_;
  std::vector<int> mover_track_;
};

// ----------------------------------------------------- projective two-phase

// On the incidence graph of a projective plane of order q (points first,
// then lines). Phase one pins the robber inside some vertex's neighborhood
// by covering the lines through a fixed point while batching over the
// points of a fixed line; phase two shrinks that neighborhood with probes
// split between it and a sibling vertex's neighborhood.
class ProjectiveTwoPhase : public CopStrategy {
 public:
  ProjectiveTwoPhase(const Graph& g, int q, int k) : q_(q), k_(k) {
    int npts = q * q + q + 1;
    if (g.n() != 2 * npts)
      throw error(errc::bad_params, "graph is not an order-q incidence graph");
    if (k < q + 1) throw error(errc::bad_params, "need k >= q+1");
    npts_ = npts;
    u1_ = npts;  // least line vertex
    u2_ = g.neighbors(u1_).front();
    for (int x : g.neighbors(u2_))
      if (x != u1_) ring_.push_back(x);
    for (int x : g.neighbors(u1_))
      if (x != u2_) pool_.push_back(x);
  }

  std::string name() const override { return "projective_two_phase"; }
  int cop_count() const override { return k_; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    auto i = std::make_unique<Inst>();
    i->s = this;
    return i;
  }

 private:
  struct Inst : StrategyInstance {
    const ProjectiveTwoPhase* s = nullptr;
    int pool_pos = 0;
    bool in_phase2 = false;

    std::unique_ptr<StrategyInstance> clone() const override {
      return std::make_unique<Inst>(*this);
    }

    std::optional<ProbeSet> next_probe(const Graph& g,
                                       const KnowledgeState& state,
                                       int) override {
      std::vector<int> cand = state.candidates.to_vector();
      if (cand.size() == 1) return ProbeSet{cand[0]};

      // a vertex whose neighborhood holds every candidate starts phase two
      int hub = -1;
      for (int u = 0; u < g.n() && hub < 0; ++u) {
        bool all = true;
        for (int x : cand)
          if (!g.adjacent(u, x)) {
            all = false;
            break;
          }
        if (all) hub = u;
      }

      if (hub < 0) {
        if (in_phase2) return std::nullopt;  // phase two lost its hub
        if (pool_pos >= int(s->pool_.size()) - 1) return std::nullopt;
        ProbeSet p = s->ring_;
        int take = std::min(s->k_ - s->q_, int(s->pool_.size()) - 1 - pool_pos);
        for (int j = 0; j < take; ++j) p.push_back(s->pool_[pool_pos + j]);
        pool_pos += take;
        return p;
      }

      in_phase2 = true;
      int alpha = int(cand.size());
      int side_lo = hub < s->npts_ ? 0 : s->npts_;
      int v = (hub == side_lo) ? side_lo + 1 : side_lo;
      ProbeSet p;
      int on_c = (alpha == 2) ? 2 : alpha - 1;
      for (int j = 0; j < on_c; ++j) p.push_back(cand[j]);
      int want = s->k_ - int(p.size());
      for (int x : g.neighbors(v)) {
        if (want == 0) break;
        if (std::find(p.begin(), p.end(), x) != p.end()) continue;
        p.push_back(x);
        --want;
      }
      return p;
    }
  };

  int q_, k_, npts_;
  int u1_, u2_;
  std::vector<int> ring_;  // lines through u2 other than u1
  std::vector<int> pool_;  // points on u1 other than u2
};

// --------------------------------------------------- decomposition: leaves

// Occupies the bags of one center-to-leaf path of the decomposition per
// round, rotating through leaf paths with maximal overlap. One round per
// decomposition leaf.
class TdLeafPaths : public CopStrategy {
 public:
  TdLeafPaths(const Graph& g, const TreeDecomposition& td) {
    TdCheck c = check_td(g, td);
    if (!c.ok) throw error(errc::invalid_decomposition, c.violation);
    TdStats st = td_stats(td);
    int nb = td.num_bags();
    auto adj = td.bag_adjacency();

    std::vector<int> leaves;
    if (nb == 1) {
      leaves.push_back(0);
    } else {
      for (int b = 0; b < nb; ++b)
        if (adj[b].size() == 1) leaves.push_back(b);
    }

    // bag path from the center to each leaf (center excluded)
    std::vector<std::vector<int>> paths(nb);
    {
      std::vector<int> parent(nb, -1), dist(nb, -1);
      std::vector<int> q{st.center_bag};
      dist[st.center_bag] = 0;
      for (size_t head = 0; head < q.size(); ++head) {
        int u = q[head];
        for (int v : adj[u])
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            parent[v] = u;
            q.push_back(v);
          }
      }
      for (int leaf : leaves) {
        std::vector<int> path;
        for (int b = leaf; b != st.center_bag; b = parent[b])
          path.push_back(b);
        std::reverse(path.begin(), path.end());
        if (path.empty()) path.push_back(leaf);  // single-bag decomposition
        paths[leaf] = std::move(path);
      }
    }

    // rotate: next leaf shares the longest prefix with the current path
    std::vector<int> order;
    std::vector<char> used(nb, 0);
    std::vector<int> cur;
    for (size_t t = 0; t < leaves.size(); ++t) {
      int best = -1, best_overlap = -1;
      for (int leaf : leaves) {
        if (used[leaf]) continue;
        int ov = 0;
        while (ov < int(cur.size()) && ov < int(paths[leaf].size()) &&
               cur[ov] == paths[leaf][ov])
          ++ov;
        if (ov > best_overlap) {
          best = leaf;
          best_overlap = ov;
        }
      }
      used[best] = 1;
      order.push_back(best);
      cur = paths[best];
    }

    for (int leaf : order) {
      std::set<int> verts;
      for (int b : paths[leaf])
        verts.insert(td.bags[b].begin(), td.bags[b].end());
      plan_.push_back(ProbeSet(verts.begin(), verts.end()));
      cops_ = std::max(cops_, int(verts.size()));
    }
  }

  std::string name() const override { return "td_leafpaths"; }
  int cop_count() const override { return cops_; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    struct Inst : StrategyInstance {
      const TdLeafPaths* s;
      std::unique_ptr<StrategyInstance> clone() const override {
        return std::make_unique<Inst>(*this);
      }
      std::optional<ProbeSet> next_probe(const Graph&, const KnowledgeState&,
                                         int round) override {
        if (round > int(s->plan_.size())) return std::nullopt;
        return s->plan_[round - 1];
      }
    };
    auto i = std::make_unique<Inst>();
    i->s = this;
    return i;
  }

  const std::vector<ProbeSet>& plan() const { return plan_; }

 private:
  std::vector<ProbeSet> plan_;
  int cops_ = 0;
};

// ------------------------------------------------- decomposition: descend

// Probes a bag plus every graph neighbor of its vertices; the closest cop
// then betrays which branch of the decomposition holds the robber, and the
// occupied bag steps outward from the center. At most radius+1 rounds.
class TdCenterOut : public CopStrategy {
 public:
  TdCenterOut(const Graph& g, const TreeDecomposition& td) : td_(td) {
    TdCheck c = check_td(g, td);
    if (!c.ok) throw error(errc::invalid_decomposition, c.violation);
    stats_ = td_stats(td);
    cops_ = std::min(g.n(), (stats_.width + 1) * (g.max_degree() + 1));
  }

  std::string name() const override { return "td_center_out"; }
  int cop_count() const override { return cops_; }

  std::unique_ptr<StrategyInstance> instantiate() const override {
    auto i = std::make_unique<Inst>();
    i->s = this;
    i->bag = stats_.center_bag;
    return i;
  }

 private:
  struct Inst : StrategyInstance {
    const TdCenterOut* s = nullptr;
    int bag = 0;
    int prev_bag = -1;
    ProbeSet prev_probe;
    std::vector<int> prev_cand;

    std::unique_ptr<StrategyInstance> clone() const override {
      return std::make_unique<Inst>(*this);
    }

    ProbeSet bag_probe(const Graph& g, int b) const {
      std::set<int> verts;
      for (int v : s->td_.bags[b]) {
        verts.insert(v);
        for (int w : g.neighbors(v)) verts.insert(w);
      }
      return ProbeSet(verts.begin(), verts.end());
    }

    std::optional<ProbeSet> next_probe(const Graph& g,
                                       const KnowledgeState& state,
                                       int round) override {
      std::vector<int> cand = state.candidates.to_vector();
      if (cand.size() == 1) return ProbeSet{cand[0]};
      if (round > s->stats_.radius + 1) return std::nullopt;

      if (round > 1) {
        // recover the played class and advance toward its closest probe
        VertexSet prev_set = VertexSet::of(g.n(), prev_cand);
        ProbeOutcome out = partition_by_distance(g, prev_set, prev_probe);
        const ProbeClass* played = nullptr;
        for (const auto& c : out.classes)
          if (c.members.count() >= 2 &&
              spread(g, c.members).to_vector() == cand) {
            played = &c;
            break;
          }
        if (!played) return std::nullopt;
        const auto& cur_bag = s->td_.bags[bag];
        int closest = -1;
        for (size_t i = 0; i < prev_probe.size(); ++i) {
          if (std::binary_search(cur_bag.begin(), cur_bag.end(), prev_probe[i]))
            continue;
          if (closest < 0 || played->distances[i] < played->distances[closest])
            closest = int(i);
        }
        if (closest < 0) return std::nullopt;
        int u = prev_probe[closest];
        int next = next_bag_toward(u);
        if (next < 0) return std::nullopt;
        prev_bag = bag;
        bag = next;
      }

      prev_probe = bag_probe(g, bag);
      prev_cand = cand;
      return prev_probe;
    }

    // neighbor bag of the current bag whose subtree holds a bag containing u
    int next_bag_toward(int u) const {
      auto adj = s->td_.bag_adjacency();
      for (int b : adj[bag]) {
        if (b == prev_bag) continue;
        // bags reachable from b without passing through the current bag
        std::vector<int> stack{b};
        std::set<int> seen{b, bag};
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          const auto& bx = s->td_.bags[x];
          if (std::binary_search(bx.begin(), bx.end(), u)) return b;
          for (int y : adj[x])
            if (!seen.count(y)) {
              seen.insert(y);
              stack.push_back(y);
            }
        }
      }
      return -1;
    }
  };

  TreeDecomposition td_;
  TdStats stats_;
  int cops_ = 0;
};

}  // namespace locgame
