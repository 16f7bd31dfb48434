#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locgame/error.hpp"
#include "locgame/game.hpp"
#include "locgame/graph.hpp"

namespace locgame {

// Per-evaluation strategy state. Instances are cloned at every robber
// branching point so sibling branches cannot observe each other's
// bookkeeping; next_probe may mutate the instance it is called on.
class StrategyInstance {
 public:
  virtual ~StrategyInstance() = default;
  virtual std::unique_ptr<StrategyInstance> clone() const = 0;
  // Probe for this round given the current pre-probe knowledge state.
  // nullopt abandons the play; the evaluator records it as Exceeded.
  virtual std::optional<ProbeSet> next_probe(const Graph& g,
                                             const KnowledgeState& state,
                                             int round) = 0;
};

// A scripted cop plan: deterministic given (state, round, memory) and never
// told the robber's true vertex.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  virtual int cop_count() const = 0;
  virtual std::unique_ptr<StrategyInstance> instantiate() const = 0;
};

struct TranscriptRound {
  int round = 0;
  ProbeSet probe;
  std::vector<int> distances;     // the reported vector for the played class
  std::vector<int> chosen_class;  // candidates after the probe
  std::vector<int> moved;         // candidates after the move; empty when captured
};

struct EvalReport {
  std::string strategy;
  int cops = 0;
  int round_cap = 0;
  bool exceeded = false;
  int worst_case_rounds = -1;  // set when !exceeded
  std::vector<TranscriptRound> transcript;  // one maximal play
};

namespace detail {

struct EvalBranch {
  bool exceeded = false;
  int rounds = 0;
  std::vector<TranscriptRound> play;

  bool worse_than(const EvalBranch& o) const {
    if (exceeded != o.exceeded) return !exceeded && o.exceeded;
    return rounds < o.rounds;
  }
};

inline EvalBranch eval_recurse(const Graph& g, const CopStrategy& strat,
                               StrategyInstance& inst, const VertexSet& s,
                               int round, int cap) {
  if (round > cap) return {true, cap, {}};
  KnowledgeState ks{s, Phase::pre_probe};
  std::optional<ProbeSet> probe = inst.next_probe(g, ks, round);
  if (!probe) return {true, cap, {}};  // strategy ran out of moves
  try {
    check_probe(g, *probe, strat.cop_count());
  } catch (const error& e) {
    throw error(errc::bad_probe, "strategy '" + strat.name() + "' round " +
                                     std::to_string(round) + ": " + e.what());
  }
  ProbeOutcome out = partition_by_distance(g, s, *probe);

  std::vector<const ProbeClass*> multi;
  for (const auto& c : out.classes)
    if (c.members.count() >= 2) multi.push_back(&c);

  if (multi.empty()) {
    TranscriptRound tr;
    tr.round = round;
    tr.probe = *probe;
    tr.distances = out.classes.front().distances;
    tr.chosen_class = out.classes.front().members.to_vector();
    return {false, round, {tr}};
  }

  EvalBranch best;
  const ProbeClass* best_class = nullptr;
  VertexSet best_moved;
  for (const ProbeClass* c : multi) {
    VertexSet moved = spread(g, c->members);
    auto child = inst.clone();
    EvalBranch b = eval_recurse(g, strat, *child, moved, round + 1, cap);
    if (best_class == nullptr || best.worse_than(b)) {
      best = std::move(b);
      best_class = c;
      best_moved = moved;
    }
  }
  TranscriptRound tr;
  tr.round = round;
  tr.probe = *probe;
  tr.distances = best_class->distances;
  tr.chosen_class = best_class->members.to_vector();
  tr.moved = best_moved.to_vector();
  best.play.insert(best.play.begin(), std::move(tr));
  return best;
}

}  // namespace detail

// Exact worst case of a fixed cop strategy: exhaustive search over the
// omniscient robber's class choices with the cop side pinned. Always an
// upper bound on the solver's capture time at the same cop count.
inline EvalReport evaluate_strategy(const Graph& g, const CopStrategy& strat,
                                    int round_cap) {
  if (round_cap < 1) throw error(errc::bad_params, "round cap must be >= 1");
  EvalReport rep;
  rep.strategy = strat.name();
  rep.cops = strat.cop_count();
  rep.round_cap = round_cap;
  if (g.n() == 1) {
    rep.worst_case_rounds = 0;
    return rep;
  }
  auto inst = strat.instantiate();
  detail::EvalBranch b = detail::eval_recurse(g, strat, *inst,
                                              VertexSet::full(g.n()), 1,
                                              round_cap);
  rep.exceeded = b.exceeded;
  if (!b.exceeded) rep.worst_case_rounds = b.rounds;
  rep.transcript = std::move(b.play);
  return rep;
}

// Re-derives every candidate set of a transcript through the game rules;
// true when the recorded play is consistent.
inline bool replay_transcript(const Graph& g, const EvalReport& rep) {
  VertexSet s = VertexSet::full(g.n());
  for (size_t i = 0; i < rep.transcript.size(); ++i) {
    const TranscriptRound& tr = rep.transcript[i];
    ProbeOutcome out = partition_by_distance(g, s, tr.probe);
    const ProbeClass* played = nullptr;
    for (const auto& c : out.classes)
      if (c.distances == tr.distances) {
        played = &c;
        break;
      }
    if (!played) return false;
    if (played->members.to_vector() != tr.chosen_class) return false;
    bool last = (i + 1 == rep.transcript.size());
    if (tr.moved.empty()) {
      // capture round: every class must be pinned
      if (!last || !out.all_singletons()) return false;
      if (!rep.exceeded && rep.worst_case_rounds != tr.round) return false;
    } else {
      if (spread(g, played->members).to_vector() != tr.moved) return false;
      s = VertexSet::of(g.n(), tr.moved);
    }
  }
  return true;
}

}  // namespace locgame
