#pragma once

#include <algorithm>
#include <map>
#include <variant>
#include <vector>

#include "locgame/bitset.hpp"
#include "locgame/error.hpp"
#include "locgame/graph.hpp"

// Knowledge-state semantics of the localization game. Cops place probes and
// learn the vector of hop distances to the hidden robber; the knowledge
// state is the set of vertices consistent with every answer so far. A round
// is one probe followed by one robber move (the robber may also stand
// still). The robber is captured in the round whose probe leaves no
// ambiguity, i.e. every distance-vector class is a single vertex.

namespace locgame {

// Ordered tuple of distinct probe vertices. Order matters: the distance
// vector reported to the cops follows it.
using ProbeSet = std::vector<int>;

inline void check_probe(const Graph& g, const ProbeSet& p, int max_cops = -1) {
  if (p.empty()) throw error(errc::bad_probe, "empty probe");
  if (max_cops >= 0 && int(p.size()) > max_cops)
    throw error(errc::bad_probe, "probe uses " + std::to_string(p.size()) +
                                     " cops, only " + std::to_string(max_cops) +
                                     " available");
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.n())
      throw error(errc::bad_probe, "probe vertex out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw error(errc::bad_probe, "probe vertices must be distinct");
  }
}

enum class Phase { pre_probe, post_probe };

struct KnowledgeState {
  VertexSet candidates;
  Phase phase = Phase::pre_probe;
};

struct ProbeClass {
  std::vector<int> distances;  // one entry per probe vertex, in probe order
  VertexSet members;
};

// Classes are pairwise disjoint, cover the probed set, and are ordered by
// their distance vector.
struct ProbeOutcome {
  std::vector<ProbeClass> classes;

  bool all_singletons() const {
    for (const auto& c : classes)
      if (c.members.count() != 1) return false;
    return true;
  }
};

inline ProbeOutcome partition_by_distance(const Graph& g, const VertexSet& s,
                                          const ProbeSet& probe) {
  if (s.empty()) throw error(errc::bad_params, "empty candidate set");
  check_probe(g, probe);
  std::map<std::vector<int>, VertexSet> groups;
  std::vector<int> vec(probe.size());
  s.for_each([&](int v) {
    for (size_t i = 0; i < probe.size(); ++i) vec[i] = g.dist(probe[i], v);
    auto it = groups.find(vec);
    if (it == groups.end())
      it = groups.emplace(vec, VertexSet(g.n())).first;
    it->second.set(v);
  });
  ProbeOutcome out;
  for (auto& [vec_key, members] : groups)
    out.classes.push_back({vec_key, std::move(members)});
  return out;
}

// One robber move applied to a candidate set: the union of closed
// neighborhoods. Always a superset of the input.
inline VertexSet spread(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw error(errc::bad_params, "empty candidate set");
  return g.closed_neighborhood(c);
}

struct Captured {};

using StepResult = std::variant<Captured, std::vector<KnowledgeState>>;

// Apply one probe to a pre-probe knowledge state. If every class is a
// singleton the probe ends the game this round. Otherwise the omniscient
// robber picks any class of size >= 2 and moves, so each such class spreads
// into a successor pre-probe state.
inline StepResult step(const Graph& g, const KnowledgeState& s,
                       const ProbeSet& probe) {
  if (s.phase != Phase::pre_probe)
    throw error(errc::bad_params, "step needs a pre-probe state");
  ProbeOutcome out = partition_by_distance(g, s.candidates, probe);
  std::vector<KnowledgeState> successors;
  for (const auto& c : out.classes)
    if (c.members.count() >= 2)
      successors.push_back({spread(g, c.members), Phase::pre_probe});
  if (successors.empty()) return Captured{};
  return successors;
}

}  // namespace locgame
