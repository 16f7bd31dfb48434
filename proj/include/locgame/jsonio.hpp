#pragma once

#include <string>

#include <json.hpp>

#include "locgame/decomposition.hpp"
#include "locgame/designs.hpp"
#include "locgame/graph.hpp"
#include "locgame/solver.hpp"
#include "locgame/strategy.hpp"

// JSON payloads for the command-line tools. Field order is fixed by using
// ordered_json and no timestamps are embedded, so identical invocations are
// byte-identical.

namespace locgame {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

inline json graph_descriptor(const Graph& g, const std::string& source) {
  json j;
  j["source"] = source;
  j["n"] = g.n();
  j["m"] = g.m();
  return j;
}

inline json to_json(const SolveResult& r, const Graph& g,
                    const std::string& source, int k) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = graph_descriptor(g, source);
  j["k"] = k;
  j["outcome"] = outcome_name(r.outcome);
  if (r.outcome == SolveOutcome::finite) j["capture_time"] = r.capture_time;
  if (r.outcome == SolveOutcome::aborted) j["abort_reason"] = r.abort_reason;
  j["states"] = r.stats.states;
  j["probes"] = r.stats.probe_evals;
  return j;
}

inline json to_json(const LocalizationResult& r, const Graph& g,
                    const std::string& source) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = graph_descriptor(g, source);
  j["aborted"] = r.aborted;
  if (r.zeta >= 0) j["localization_number"] = r.zeta;
  json table = json::array();
  for (const auto& [k, res] : r.per_k) {
    json row;
    row["k"] = k;
    row["outcome"] = outcome_name(res.outcome);
    if (res.outcome == SolveOutcome::finite)
      row["capture_time"] = res.capture_time;
    table.push_back(row);
  }
  j["per_k"] = table;
  return j;
}

inline json to_json(const MetricDimensionResult& r, const Graph& g,
                    const std::string& source) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = graph_descriptor(g, source);
  j["aborted"] = r.aborted;
  if (r.beta >= 0) {
    j["metric_dimension"] = r.beta;
    j["witness"] = r.witness;
  }
  j["sets_checked"] = r.sets_checked;
  return j;
}

inline json to_json(const EvalReport& r, const Graph& g,
                    const std::string& source) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = graph_descriptor(g, source);
  j["strategy"] = r.strategy;
  j["cops"] = r.cops;
  j["round_cap"] = r.round_cap;
  j["status"] = r.exceeded ? "exceeded" : "captured";
  if (!r.exceeded) j["worst_case_rounds"] = r.worst_case_rounds;
  json play = json::array();
  for (const auto& tr : r.transcript) {
    json row;
    row["round"] = tr.round;
    row["probe"] = tr.probe;
    row["distances"] = tr.distances;
    row["class"] = tr.chosen_class;
    row["moved"] = tr.moved;
    play.push_back(row);
  }
  j["transcript"] = play;
  return j;
}

inline json to_json(const TreeDecomposition& td) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["bags"] = td.bags;
  json edges = json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  j["kind"] = td.kind == DecompKind::path ? "path" : "tree";
  return j;
}

inline TreeDecomposition td_from_json(const json& j) {
  TreeDecomposition td;
  for (const auto& bag : j.at("bags"))
    td.bags.push_back(bag.get<std::vector<int>>());
  for (auto& b : td.bags) std::sort(b.begin(), b.end());
  for (const auto& e : j.at("edges"))
    td.tree_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  td.kind = j.value("kind", "tree") == "path" ? DecompKind::path
                                              : DecompKind::tree;
  return td;
}

inline json to_json(const ProjectivePlane& p) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = p.q;
  j["lines"] = p.lines;
  return j;
}

}  // namespace locgame
