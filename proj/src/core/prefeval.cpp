#include "core/prefeval.hpp"

#include <algorithm>
#include <map>

#include "core/match.hpp"

namespace priorepair {

std::vector<PrefStatement> evaluate_rules(const std::vector<PreferenceRule>& rules, const Dataset& data,
                                          const MetaDatabase& meta, const TaxonomyClosure& tax) {
  MatchContext ctx{data, meta, tax};
  std::map<std::pair<FactIndex, FactIndex>, int> min_level;
  for (const PreferenceRule& rule : rules) {
    match_body(rule.body, ctx, {}, [&](const Match& m) {
      auto i1 = m.binding.find(rule.v1);
      auto i2 = m.binding.find(rule.v2);
      if (i1 == m.binding.end() || i2 == m.binding.end()) return true;
      if (i1->second.kind != Value::Kind::Id || i2->second.kind != Value::Kind::Id) return true;
      FactIndex from = i1->second.id;
      FactIndex to = i2->second.id;
      if (from == to) return true;
      auto [it, inserted] = min_level.emplace(std::make_pair(from, to), rule.level);
      if (!inserted) it->second = std::min(it->second, rule.level);
      return true;
    });
  }
  std::vector<PrefStatement> out;
  out.reserve(min_level.size());
  for (const auto& [pair, level] : min_level) out.push_back({pair.first, pair.second, level});
  return out;
}

std::vector<PrefStatement> restrict_to_conflicts(const std::vector<PrefStatement>& stmts,
                                                 const std::vector<Conflict>& conflicts) {
  std::set<std::pair<FactIndex, FactIndex>> pairs = conflicting_pairs(conflicts);
  std::vector<PrefStatement> out;
  for (const PrefStatement& s : stmts) {
    auto key = s.from < s.to ? std::make_pair(s.from, s.to) : std::make_pair(s.to, s.from);
    if (pairs.count(key)) out.push_back(s);
  }
  return out;
}

std::vector<PrefStatement> evaluate_rules_on_pairs(const std::vector<PreferenceRule>& rules, const Dataset& data,
                                                   const MetaDatabase& meta, const TaxonomyClosure& tax,
                                                   const std::set<std::pair<FactIndex, FactIndex>>& pairs) {
  MatchContext ctx{data, meta, tax};
  std::map<std::pair<FactIndex, FactIndex>, int> min_level;
  std::vector<std::pair<FactIndex, FactIndex>> ordered;
  ordered.reserve(2 * pairs.size());
  for (const auto& [a, b] : pairs) {
    ordered.emplace_back(a, b);
    ordered.emplace_back(b, a);
  }
  for (const PreferenceRule& rule : rules) {
    std::vector<Binding> seeds;
    seeds.reserve(ordered.size());
    std::vector<std::pair<FactIndex, FactIndex>> keys;
    for (const auto& [from, to] : ordered) {
      auto it = min_level.find(std::make_pair(from, to));
      if (it != min_level.end() && it->second <= rule.level) continue;  // cannot improve
      Binding seed;
      seed[rule.v1] = Value::make_id(from);
      seed[rule.v2] = Value::make_id(to);
      seeds.push_back(std::move(seed));
      keys.emplace_back(from, to);
    }
    match_each(rule.body, ctx, seeds, [&](std::size_t i, const Match&) {
      auto [it, inserted] = min_level.emplace(keys[i], rule.level);
      if (!inserted) it->second = std::min(it->second, rule.level);
      return false;  // one witness per pair suffices
    });
  }
  std::vector<PrefStatement> out;
  out.reserve(min_level.size());
  for (const auto& [pair, level] : min_level) out.push_back({pair.first, pair.second, level});
  return out;
}

AcyclicityResult strong_acyclicity_instance(const std::vector<PrefStatement>& stmts) {
  std::map<FactIndex, std::vector<const PrefStatement*>> adj;
  for (const PrefStatement& s : stmts) adj[s.from].push_back(&s);

  std::map<FactIndex, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<const PrefStatement*> path;

  // Iterative DFS keeping the edge path for the cycle witness.
  struct Frame {
    FactIndex node;
    std::size_t next = 0;
  };
  for (const auto& kv : adj) {
    FactIndex root = kv.first;
    if (state[root]) continue;
    std::vector<Frame> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      auto& out_edges = adj[fr.node];
      if (fr.next == out_edges.size()) {
        state[fr.node] = 2;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const PrefStatement* e = out_edges[fr.next++];
      int st = state[e->to];
      if (st == 1) {
        // Found a back edge; the cycle is the path suffix from e->to plus e.
        path.push_back(e);
        AcyclicityResult res;
        res.acyclic = false;
        bool in_cycle = false;
        for (const PrefStatement* p : path) {
          if (p->from == e->to) in_cycle = true;
          if (in_cycle) res.cycle.push_back(*p);
        }
        return res;
      }
      if (st == 0) {
        state[e->to] = 1;
        path.push_back(e);
        stack.push_back({e->to, 0});
      }
    }
  }
  return {};
}

}  // namespace priorepair
