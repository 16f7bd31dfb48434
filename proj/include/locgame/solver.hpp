#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locgame/bitset.hpp"
#include "locgame/error.hpp"
#include "locgame/game.hpp"
#include "locgame/graph.hpp"

// Exact computation of localization-game capture times via least-fixed-point
// iteration over knowledge states:
//
//   Win_1 = { S : some probe splits S into singleton classes }
//   Win_t = { S : some probe leaves every class of size >= 2 with its
//                 spread already in Win_{t-1} }
//
// capture_time = least t with the full vertex set in Win_t. When the fixed
// point stabilizes without reaching the full set, the robber wins. Budget
// exhaustion is an explicit outcome, never a wrong answer.
//
// Two engines compute the same fixed point:
//  * explicit: enumerates every probe of size <= k per reachable state and
//    iterates Win sweeps to stabilization; certifies robber wins. Used when
//    the probe space is small.
//  * deepening: iterative deepening with DFS over probe combinations and
//    incremental partition refinement. Probe vertices that split no
//    unresolved class are skipped (such a vertex refines nothing now or
//    deeper, so skipping cannot change the computed value; the equivalence
//    is exercised against the explicit engine in tests). Cannot certify
//    robber wins: it reports a budget abort at the round cap instead.

namespace locgame {

struct SolveBudget {
  uint64_t max_states = uint64_t(1) << 22;
  uint64_t max_probe_evals = 1000000000;
  int max_rounds = 64;
};

enum class ProbeUniverse { all_vertices, leaves_only };

enum class SolveEngine { auto_select, explicit_iteration, deepening };

enum class SolveOutcome { finite, robber_wins, aborted };

inline const char* outcome_name(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::finite: return "finite";
    case SolveOutcome::robber_wins: return "robber_wins";
    case SolveOutcome::aborted: return "aborted";
  }
  return "unknown";
}

struct SolveStats {
  uint64_t states = 0;
  uint64_t probe_evals = 0;
};

struct SolveResult {
  SolveOutcome outcome = SolveOutcome::aborted;
  int capture_time = -1;  // set iff finite
  SolveStats stats;
  std::string abort_reason;
  // Optimal probe for each knowledge state on the witness tree (pre-probe
  // states reachable under the recorded probes).
  std::unordered_map<VertexSet, ProbeSet, VertexSetHash> witness;
};

namespace detail {

struct BudgetError {
  std::string reason;
};

class BudgetGuard {
 public:
  BudgetGuard(const SolveBudget& b, SolveStats& stats)
      : budget_(b), stats_(stats) {}

  void charge_probe() {
    if (++stats_.probe_evals > budget_.max_probe_evals)
      throw BudgetError{"probe evaluation budget exhausted (" +
                        std::to_string(budget_.max_probe_evals) + ")"};
  }

  void charge_state() {
    if (++stats_.states > budget_.max_states)
      throw BudgetError{"state budget exhausted (" +
                        std::to_string(budget_.max_states) + ")"};
  }

 private:
  const SolveBudget& budget_;
  SolveStats& stats_;
};

inline double combination_total(int universe, int max_size) {
  double total = 0, c = 1;
  for (int j = 1; j <= std::min(universe, max_size); ++j) {
    c = c * (universe - j + 1) / j;
    total += c;
    if (total > 1e18) break;
  }
  return total;
}

// All nonempty ascending tuples over universe with size <= max_size, in
// prefix-first lexicographic order: (u0), (u0,u1), (u0,u1,u2), ...
// Stops and returns true as soon as the callback does.
template <class F>
bool for_each_probe(const std::vector<int>& universe, int max_size, F&& f) {
  std::vector<int> chosen;
  auto rec = [&](auto&& self, size_t start) -> bool {
    for (size_t i = start; i < universe.size(); ++i) {
      chosen.push_back(universe[i]);
      if (f(chosen)) return true;
      if (int(chosen.size()) < max_size)
        if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

// Exact-size ascending combinations in lexicographic order.
template <class F>
bool for_each_combination(int universe, int size, F&& f) {
  std::vector<int> c(size);
  for (int i = 0; i < size; ++i) c[i] = i;
  while (true) {
    if (f(c)) return true;
    int i = size - 1;
    while (i >= 0 && c[i] == universe - size + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
  }
}

// Explicit engine: reachability sweep storing deduplicated successor lists,
// then Win_t sweeps to stabilization.
class ExplicitEngine {
 public:
  ExplicitEngine(const Graph& g, int k, std::vector<int> universe,
                 const SolveBudget& budget, SolveStats& stats)
      : g_(g),
        k_(k),
        universe_(std::move(universe)),
        budget_(budget),
        guard_(budget, stats) {}

  SolveResult run() {
    SolveResult res;
    int root = intern(VertexSet::full(g_.n()));
    for (size_t s = 0; s < states_.size(); ++s) expand(int(s));

    // Win sweeps: value[s] = t for states first achievable in sweep t.
    // Stops once the root resolves or the fixed point stabilizes; a stable
    // fixed point without the root is a robber-win certificate.
    std::vector<int> value(states_.size(), INT_MAX);
    int t = 0;
    while (value[root] == INT_MAX) {
      if (t >= budget_.max_rounds)
        throw BudgetError{"round cap (" + std::to_string(budget_.max_rounds) +
                          ") reached"};
      ++t;
      bool changed = false;
      for (size_t s = 0; s < states_.size(); ++s) {
        if (value[s] != INT_MAX) continue;
        for (const auto& succs : outcomes_[s]) {
          bool all_won = true;
          for (int id : succs)
            if (value[id] == INT_MAX) {
              all_won = false;
              break;
            }
          if (all_won) {
            value[s] = t;
            changed = true;
            break;
          }
        }
      }
      if (!changed) break;
    }

    if (value[root] == INT_MAX) {
      res.outcome = SolveOutcome::robber_wins;
      return res;
    }
    res.outcome = SolveOutcome::finite;
    res.capture_time = value[root];
    extract_witness(root, value, res);
    return res;
  }

 private:
  int intern(const VertexSet& bits) {
    auto it = id_.find(bits);
    if (it != id_.end()) return it->second;
    guard_.charge_state();
    int id = int(states_.size());
    id_.emplace(bits, id);
    states_.push_back(bits);
    members_.push_back(bits.to_vector());
    outcomes_.emplace_back();
    return id;
  }

  // Partition the state's members by the probe; returns true when every
  // class is a singleton, else fills succ with spread-state ids. With
  // intern_new false, unseen successor states become -1 instead of being
  // added to the table.
  bool apply_probe(int s, const ProbeSet& probe, std::vector<int>* succ,
                   bool intern_new = true) {
    guard_.charge_probe();
    classes_.clear();
    classes_.push_back(members_[s]);
    for (int u : probe) refine(u);
    bool captured = true;
    if (succ) succ->clear();
    for (const auto& c : classes_) {
      if (c.size() < 2) continue;
      captured = false;
      if (!succ) return false;
      VertexSet sp(g_.n());
      for (int v : c) {
        sp.set(v);
        for (int w : g_.neighbors(v)) sp.set(w);
      }
      if (intern_new) {
        succ->push_back(intern(sp));
      } else {
        auto it = id_.find(sp);
        succ->push_back(it == id_.end() ? -1 : it->second);
      }
    }
    return captured;
  }

  void refine(int u) {
    const int* drow = g_.dist_row(u);
    next_classes_.clear();
    for (const auto& c : classes_) {
      touched_.clear();
      for (int v : c) {
        int d = drow[v];
        if (buckets_.size() <= size_t(d)) buckets_.resize(d + 1);
        if (buckets_[d].empty()) touched_.push_back(d);
        buckets_[d].push_back(v);
      }
      std::sort(touched_.begin(), touched_.end());
      for (int d : touched_) {
        next_classes_.push_back(std::move(buckets_[d]));
        buckets_[d].clear();
      }
    }
    classes_.swap(next_classes_);
  }

  // Record the distinct successor sets over all probes. A capture probe pins
  // the state's value at 1, so such states get a single empty outcome and no
  // successors enter the table (reachable-state pruning).
  void expand(int s) {
    bool captured = for_each_probe(universe_, probe_cap(), [&](const ProbeSet& p) {
      return apply_probe(s, p, nullptr);
    });
    if (captured) {
      outcomes_[s].assign(1, {});
      return;
    }
    std::vector<int> succ;
    for_each_probe(universe_, probe_cap(), [&](const ProbeSet& p) {
      apply_probe(s, p, &succ);
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      if (std::find(outcomes_[s].begin(), outcomes_[s].end(), succ) ==
          outcomes_[s].end())
        outcomes_[s].push_back(succ);
      return false;
    });
  }

  int probe_cap() const { return std::min<int>(k_, int(universe_.size())); }

  // Record the lexicographically least probe achieving each state's value,
  // walking the optimal-play closure from the root.
  void extract_witness(int root, const std::vector<int>& value,
                       SolveResult& res) {
    std::vector<int> stack{root};
    std::vector<char> seen(states_.size(), 0);
    seen[root] = 1;
    std::vector<int> succ;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for_each_probe(universe_, probe_cap(), [&](const ProbeSet& p) {
        if (apply_probe(s, p, &succ, /*intern_new=*/false)) {
          if (value[s] == 1) {
            res.witness[states_[s]] = p;
            return true;
          }
          return false;
        }
        int worst = 0;
        for (int id : succ) {
          if (id < 0 || value[id] == INT_MAX) return false;
          worst = std::max(worst, value[id]);
        }
        if (1 + worst != value[s]) return false;
        res.witness[states_[s]] = p;
        for (int id : succ)
          if (!seen[id]) {
            seen[id] = 1;
            stack.push_back(id);
          }
        return true;
      });
    }
  }

  const Graph& g_;
  int k_;
  std::vector<int> universe_;
  const SolveBudget& budget_;
  BudgetGuard guard_;

  std::unordered_map<VertexSet, int, VertexSetHash> id_;
  std::vector<VertexSet> states_;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<std::vector<int>>> outcomes_;

  std::vector<std::vector<int>> classes_, next_classes_, buckets_;
  std::vector<int> touched_;
};

// Iterative-deepening engine with DFS over probe combinations and
// incremental refinement of unresolved classes.
class DeepeningEngine {
 public:
  DeepeningEngine(const Graph& g, int k, std::vector<int> universe,
                  const SolveBudget& budget, SolveStats& stats)
      : g_(g),
        k_(std::min<int>(k, int(universe.size()))),
        universe_(std::move(universe)),
        guard_(budget, stats),
        budget_(budget) {}

  SolveResult run() {
    SolveResult res;
    VertexSet root_bits = VertexSet::full(g_.n());
    std::vector<int> root_ids = root_bits.to_vector();
    for (int t = 1; t <= budget_.max_rounds; ++t) {
      if (can_win(root_ids, root_bits, t)) {
        res.outcome = SolveOutcome::finite;
        res.capture_time = t;
        extract_witness(root_bits, res);
        return res;
      }
    }
    throw BudgetError{"round cap (" + std::to_string(budget_.max_rounds) +
                      ") reached without a capture certificate"};
  }

 private:
  struct Memo {
    int lb = 1;           // value >= lb
    int ub = INT_MAX;     // value <= ub, probe below certifies it
    ProbeSet probe;
  };

  struct Level {
    std::vector<int> elems;
    std::vector<std::pair<int, int>> ranges;
  };

  bool can_win(const std::vector<int>& ids, const VertexSet& bits, int t) {
    if (t <= 0) return false;
    if (ids.size() <= 1) return true;  // next probe pins a lone candidate
    auto it = memo_.find(bits);
    if (it == memo_.end()) {
      guard_.charge_state();
      it = memo_.emplace(bits, Memo{}).first;
    } else {
      if (it->second.ub <= t) return true;
      if (it->second.lb > t) return false;
    }

    std::vector<Level> levels(k_ + 1);
    levels[0].elems = ids;
    levels[0].ranges = {{0, int(ids.size())}};
    std::vector<int> chosen;
    std::vector<std::vector<int>> buckets(g_.diameter() + 1);
    std::vector<int> touched;

    auto dfs = [&](auto&& self, int depth, size_t start) -> bool {
      for (size_t i = start; i < universe_.size(); ++i) {
        int u = universe_[i];
        guard_.charge_probe();
        const int* drow = g_.dist_row(u);
        Level& in = levels[depth];
        Level& out = levels[depth + 1];
        out.elems.clear();
        out.ranges.clear();
        bool split_any = false;
        for (auto [a, b] : in.ranges) {
          touched.clear();
          for (int j = a; j < b; ++j) {
            int v = in.elems[j];
            int d = drow[v];
            if (buckets[d].empty()) touched.push_back(d);
            buckets[d].push_back(v);
          }
          if (touched.size() == 1) {  // class not split; still unresolved
            int d = touched[0];
            int from = int(out.elems.size());
            out.elems.insert(out.elems.end(), buckets[d].begin(),
                             buckets[d].end());
            out.ranges.push_back({from, int(out.elems.size())});
            buckets[d].clear();
            continue;
          }
          split_any = true;
          std::sort(touched.begin(), touched.end());
          for (int d : touched) {
            auto& cls = buckets[d];
            if (cls.size() >= 2 && !class_resolved(cls, t)) {
              int from = int(out.elems.size());
              out.elems.insert(out.elems.end(), cls.begin(), cls.end());
              out.ranges.push_back({from, int(out.elems.size())});
            }
            cls.clear();
          }
        }
        if (!split_any) continue;  // u refines nothing here or deeper
        if (out.ranges.empty()) {
          chosen.push_back(u);
          return true;
        }
        if (depth + 1 < k_) {
          chosen.push_back(u);
          if (self(self, depth + 1, i + 1)) return true;
          chosen.pop_back();
        }
      }
      return false;
    };

    bool won = dfs(dfs, 0, 0);
    Memo& m = memo_[bits];  // re-find: recursion may have rehashed
    if (won) {
      if (t < m.ub) {
        m.ub = t;
        m.probe = chosen;
      }
      return true;
    }
    m.lb = std::max(m.lb, t + 1);
    return false;
  }

  // A class is resolved when its post-move spread is winnable in t-1.
  bool class_resolved(const std::vector<int>& cls, int t) {
    VertexSet sp(g_.n());
    for (int v : cls) {
      sp.set(v);
      for (int w : g_.neighbors(v)) sp.set(w);
    }
    return can_win(sp.to_vector(), sp, t - 1);
  }

  void extract_witness(const VertexSet& root, SolveResult& res) {
    std::vector<VertexSet> stack{root};
    while (!stack.empty()) {
      VertexSet bits = stack.back();
      stack.pop_back();
      if (res.witness.count(bits)) continue;
      auto it = memo_.find(bits);
      if (it == memo_.end() || it->second.ub == INT_MAX) continue;
      const ProbeSet& probe = it->second.probe;
      res.witness[bits] = probe;
      ProbeOutcome out = partition_by_distance(g_, bits, probe);
      for (const auto& c : out.classes)
        if (c.members.count() >= 2) stack.push_back(spread(g_, c.members));
    }
  }

  const Graph& g_;
  int k_;
  std::vector<int> universe_;
  BudgetGuard guard_;
  const SolveBudget& budget_;
  std::unordered_map<VertexSet, Memo, VertexSetHash> memo_;
};

}  // namespace detail

inline SolveResult solve_capture_time(
    const Graph& g, int k, const SolveBudget& budget = {},
    ProbeUniverse universe_kind = ProbeUniverse::all_vertices,
    SolveEngine engine = SolveEngine::auto_select) {
  if (k < 1) throw error(errc::bad_params, "need at least one cop");
  SolveResult res;
  if (g.n() == 1) {  // the robber's vertex is known before any probe
    res.outcome = SolveOutcome::finite;
    res.capture_time = 0;
    return res;
  }
  std::vector<int> universe;
  if (universe_kind == ProbeUniverse::leaves_only) {
    if (!g.is_tree())
      throw error(errc::not_a_tree, "leaf-only probes need a tree");
    universe = g.leaves();
  } else {
    universe.resize(g.n());
    for (int v = 0; v < g.n(); ++v) universe[v] = v;
  }
  if (engine == SolveEngine::auto_select) {
    double combos = detail::combination_total(int(universe.size()), k);
    engine = (combos <= 600 && g.n() <= 32) ? SolveEngine::explicit_iteration
                                            : SolveEngine::deepening;
  }
  try {
    if (engine == SolveEngine::explicit_iteration) {
      detail::ExplicitEngine eng(g, k, universe, budget, res.stats);
      SolveResult r = eng.run();
      r.stats = res.stats;
      return r;
    }
    detail::DeepeningEngine eng(g, k, universe, budget, res.stats);
    SolveResult r = eng.run();
    r.stats = res.stats;
    return r;
  } catch (const detail::BudgetError& e) {
    res.outcome = SolveOutcome::aborted;
    res.abort_reason = e.reason;
    return res;
  }
}

inline bool is_resolving(const Graph& g, const ProbeSet& probe) {
  check_probe(g, probe);
  std::vector<std::vector<int>> vectors(g.n(), std::vector<int>(probe.size()));
  for (int v = 0; v < g.n(); ++v)
    for (size_t i = 0; i < probe.size(); ++i)
      vectors[v][i] = g.dist(probe[i], v);
  std::sort(vectors.begin(), vectors.end());
  return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

struct MetricDimensionResult {
  bool aborted = false;
  int beta = -1;
  ProbeSet witness;  // lexicographically least resolving set of size beta
  uint64_t sets_checked = 0;
};

inline MetricDimensionResult metric_dimension(const Graph& g,
                                              const SolveBudget& budget = {}) {
  MetricDimensionResult res;
  if (g.n() == 1) {
    res.beta = 0;
    return res;
  }
  for (int size = 1; size < g.n(); ++size) {
    bool found = detail::for_each_combination(g.n(), size, [&](const std::vector<int>& c) {
      if (++res.sets_checked > budget.max_probe_evals) {
        res.aborted = true;
        return true;
      }
      if (is_resolving(g, c)) {
        res.beta = size;
        res.witness = c;
        return true;
      }
      return false;
    });
    if (res.aborted) {
      res.beta = -1;
      return res;
    }
    if (found) return res;
  }
  // all of V minus one vertex always resolves; unreachable in practice
  res.beta = g.n() - 1;
  for (int v = 0; v + 1 < g.n(); ++v) res.witness.push_back(v);
  return res;
}

struct LocalizationResult {
  bool aborted = false;
  int zeta = -1;
  std::vector<std::pair<int, SolveResult>> per_k;  // ascending k
};

// Smallest k with a finite capture time. Iterates k = 1, 2, ...; guaranteed
// to stop because probing a resolving set captures in one round, so k never
// exceeds the metric dimension.
inline LocalizationResult localization_number(const Graph& g,
                                              const SolveBudget& budget = {}) {
  LocalizationResult res;
  if (g.n() == 1) {
    res.zeta = 1;
    return res;
  }
  for (int k = 1; k <= g.n(); ++k) {
    SolveResult r = solve_capture_time(g, k, budget);
    res.per_k.push_back({k, r});
    if (r.outcome == SolveOutcome::finite) {
      res.zeta = k;
      return res;
    }
    if (r.outcome == SolveOutcome::aborted) {
      res.aborted = true;
      return res;
    }
  }
  return res;  // unreachable: k = n always captures
}

}  // namespace locgame
