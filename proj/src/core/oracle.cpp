#include "core/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

namespace priorepair {

namespace {

std::size_t env_cap(std::size_t fallback) {
  const char* s = std::getenv("PRIOREPAIR_ORACLE_CAP");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

FactMask bit(std::size_t f) {
  assert(f < 64);
  return FactMask{1} << f;
}

std::vector<FactMask> conflict_masks(const std::vector<Conflict>& conflicts) {
  std::vector<FactMask> out;
  out.reserve(conflicts.size());
  for (const auto& c : conflicts) {
    FactMask m = 0;
    for (FactIndex f : c) m |= bit(f);
    out.push_back(m);
  }
  return out;
}

// Keeps the repairs r with no consistent improvement: a set bringing in some
// fact b outside r while dropping only facts dominated by b. Such a set
// exists iff every conflict that b completes inside r contains a fact b
// dominates.
std::vector<FactMask> improvement_filter(std::size_t nfacts,
                                         const std::vector<Conflict>& conflicts,
                                         const std::vector<FactMask>& repairs,
                                         const std::vector<FactMask>& dom) {
  std::vector<FactMask> cmasks = conflict_masks(conflicts);
  std::vector<std::vector<std::size_t>> by_fact(nfacts);
  for (std::size_t ci = 0; ci < conflicts.size(); ++ci)
    for (FactIndex f : conflicts[ci]) by_fact[f].push_back(ci);

  std::vector<FactMask> out;
  for (FactMask r : repairs) {
    bool improved = false;
    for (std::size_t b = 0; b < nfacts && !improved; ++b) {
      FactMask bbit = bit(b);
      if (r & bbit) continue;
      bool blocked = false;
      for (std::size_t ci : by_fact[b]) {
        FactMask others = cmasks[ci] & ~bbit;
        if ((others & r) != others) continue;
        if ((others & dom[b]) == 0) {
          blocked = true;
          break;
        }
      }
      if (!blocked) improved = true;
    }
    if (!improved) out.push_back(r);
  }
  return out;
}

// True when dst is reachable from src over the adjacency lists.
bool reaches(const std::vector<std::vector<std::size_t>>& adj, std::size_t src,
             std::size_t dst) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::size_t> stack{src};
  seen[src] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (v == dst) return true;
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

std::size_t oracle_fact_cap() { return std::min<std::size_t>(env_cap(20), 64); }
std::size_t oracle_pair_cap() { return env_cap(16); }

std::vector<FactMask> enumerate_repairs(std::size_t nfacts,
                                        const std::vector<Conflict>& conflicts) {
  if (nfacts > oracle_fact_cap())
    throw CapExceeded("dataset has " + std::to_string(nfacts) +
                      " facts; repair enumeration is capped at " +
                      std::to_string(oracle_fact_cap()) +
                      " (set PRIOREPAIR_ORACLE_CAP to raise it)");
  std::vector<FactMask> cmasks = conflict_masks(conflicts);
  auto consistent = [&](FactMask s) {
    for (FactMask m : cmasks)
      if ((s & m) == m) return false;
    return true;
  };
  std::vector<FactMask> out;
  const FactMask limit = nfacts >= 64 ? ~FactMask{0} : bit(nfacts) - 1;
  for (FactMask s = 0;; ++s) {
    if (consistent(s)) {
      bool maximal = true;
      for (std::size_t f = 0; f < nfacts; ++f) {
        if ((s & bit(f)) == 0 && consistent(s | bit(f))) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
    if (s == limit) break;
  }
  return out;
}

std::vector<FactMask> pareto_optimal(std::size_t nfacts,
                                     const std::vector<Conflict>& conflicts,
                                     const std::vector<FactMask>& repairs,
                                     const PriorityRelation& prio) {
  std::vector<FactMask> dom(nfacts, 0);
  for (const auto& pr : prio.pairs)
    if (pr.first < nfacts && pr.second < nfacts) dom[pr.first] |= bit(pr.second);
  return improvement_filter(nfacts, conflicts, repairs, dom);
}

std::vector<FactMask> completion_optimal(std::size_t nfacts,
                                         const std::vector<Conflict>& conflicts,
                                         const std::vector<FactMask>& repairs,
                                         const PriorityRelation& prio) {
  std::vector<std::pair<FactIndex, FactIndex>> open;
  for (const auto& p : conflicting_pairs(conflicts))
    if (!prio.contains(p.first, p.second) && !prio.contains(p.second, p.first))
      open.push_back(p);
  if (open.size() > oracle_pair_cap())
    throw CapExceeded(std::to_string(open.size()) +
                      " unordered conflicting pairs; completion enumeration is "
                      "capped at " +
                      std::to_string(oracle_pair_cap()) +
                      " (set PRIOREPAIR_ORACLE_CAP to raise it)");

  std::vector<std::vector<std::size_t>> adj(nfacts);
  std::vector<FactMask> dom(nfacts, 0);
  for (const auto& pr : prio.pairs) {
    if (pr.first < nfacts && pr.second < nfacts) {
      adj[pr.first].push_back(pr.second);
      dom[pr.first] |= bit(pr.second);
    }
  }

  std::set<FactMask> acc;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == open.size()) {
      for (FactMask r : improvement_filter(nfacts, conflicts, repairs, dom))
        acc.insert(r);
      return;
    }
    for (int dir = 0; dir < 2; ++dir) {
      std::size_t u = dir ? open[i].second : open[i].first;
      std::size_t v = dir ? open[i].first : open[i].second;
      if (reaches(adj, v, u)) continue;  // orienting u -> v would close a cycle
      adj[u].push_back(v);
      dom[u] |= bit(v);
      go(i + 1);
      dom[u] &= ~bit(v);
      adj[u].pop_back();
    }
  };
  go(0);
  return {acc.begin(), acc.end()};
}

std::vector<FactMask> repair_family(RepairKind kind, std::size_t nfacts,
                                    const std::vector<Conflict>& conflicts,
                                    const PriorityRelation& prio) {
  std::vector<FactMask> reps = enumerate_repairs(nfacts, conflicts);
  switch (kind) {
    case RepairKind::Subset: return reps;
    case RepairKind::Pareto: return pareto_optimal(nfacts, conflicts, reps, prio);
    case RepairKind::Completion:
      return completion_optimal(nfacts, conflicts, reps, prio);
  }
  return reps;
}

namespace {

std::vector<std::vector<char>> reach_closure(std::uint32_t n,
                                             const std::vector<LeveledEdge>& edges,
                                             int level_cap) {
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (const auto& e : edges)
    if (e.level <= level_cap) m[e.from][e.to] = 1;
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::uint32_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = 1;
  return m;
}

std::vector<LeveledEdge> sorted_edges(std::vector<LeveledEdge> v) {
  std::sort(v.begin(), v.end(), [](const LeveledEdge& a, const LeveledEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  return v;
}

// Every simple cycle, as a sorted set of edge indices; each is discovered
// once, from its smallest node.
std::vector<std::vector<std::size_t>> simple_cycles(const EdgeGraph& g) {
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> out(g.nodes);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    out[g.edges[i].from].push_back({g.edges[i].to, i});

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<char> on_path(g.nodes, 0);
  std::vector<std::size_t> path;
  std::uint32_t start = 0;
  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t v) {
    for (const auto& step : out[v]) {
      std::uint32_t w = step.first;
      if (w == start) {
        std::vector<std::size_t> cyc = path;
        cyc.push_back(step.second);
        std::sort(cyc.begin(), cyc.end());
        cycles.push_back(std::move(cyc));
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(step.second);
        dfs(w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (start = 0; start < g.nodes; ++start) dfs(start);
  return cycles;
}

}  // namespace

std::vector<LeveledEdge> oracle_poss(const EdgeGraph& g) {
  int n = g.max_level();
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    auto m = reach_closure(g.nodes, g.edges, k);
    bool cyclic = false;
    for (std::uint32_t v = 0; v < g.nodes && !cyclic; ++v) cyclic = m[v][v];
    if (cyclic) break;
    best = k;
  }
  std::vector<LeveledEdge> out;
  for (const auto& e : g.edges)
    if (e.level <= best) out.push_back(e);
  return sorted_edges(std::move(out));
}

std::vector<LeveledEdge> oracle_nondef(const EdgeGraph& g) {
  std::vector<LeveledEdge> out;
  for (const auto& e : g.edges) {
    auto m = reach_closure(g.nodes, g.edges, e.level);
    if (!m[e.to][e.from]) out.push_back(e);
  }
  return sorted_edges(std::move(out));
}

std::vector<LeveledEdge> oracle_grd(const EdgeGraph& g) {
  const std::size_t m = g.edges.size();
  // A cycle defeats each of its top-level edges, by way of the others.
  std::vector<std::vector<std::vector<std::size_t>>> attacks(m);
  for (const auto& z : simple_cycles(g)) {
    int top = 0;
    for (std::size_t e : z) top = std::max(top, g.edges[e].level);
    for (std::size_t e : z) {
      if (g.edges[e].level != top) continue;
      std::vector<std::size_t> rest;
      for (std::size_t f : z)
        if (f != e) rest.push_back(f);
      attacks[e].push_back(std::move(rest));
    }
  }

  std::vector<char> acc(m, 0);
  for (;;) {
    std::vector<char> countered(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      for (const auto& s : attacks[e]) {
        bool inside = true;
        for (std::size_t f : s)
          if (!acc[f]) {
            inside = false;
            break;
          }
        if (inside) {
          countered[e] = 1;
          break;
        }
      }
    }
    std::vector<char> next(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      bool defended = true;
      for (const auto& s : attacks[e]) {
        bool broken = false;
        for (std::size_t f : s)
          if (countered[f]) {
            broken = true;
            break;
          }
        if (!broken) {
          defended = false;
          break;
        }
      }
      next[e] = defended;
    }
    if (next == acc) break;
    acc = std::move(next);
  }

  std::vector<LeveledEdge> out;
  for (std::size_t e = 0; e < m; ++e)
    if (acc[e]) out.push_back(g.edges[e]);
  return sorted_edges(std::move(out));
}

std::vector<LeveledEdge> oracle_down_removal_loop(const EdgeGraph& g) {
  std::vector<char> alive(g.edges.size(), 1);
  auto on_cycle = [&](std::size_t e) {
    // back-path to -> from among the surviving edges
    std::uint32_t src = g.edges[e].to, dst = g.edges[e].from;
    if (src == dst) return true;
    std::vector<char> seen(g.nodes, 0);
    std::vector<std::uint32_t> stack{src};
    seen[src] = 1;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (!alive[j] || g.edges[j].from != v) continue;
        std::uint32_t w = g.edges[j].to;
        if (w == dst) return true;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };
  for (int lvl = g.max_level(); lvl >= 1; --lvl) {
    std::vector<std::size_t> doomed;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (alive[e] && g.edges[e].level == lvl && on_cycle(e)) doomed.push_back(e);
    for (std::size_t e : doomed) alive[e] = 0;
  }
  std::vector<LeveledEdge> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (alive[e]) out.push_back(g.edges[e]);
  return sorted_edges(std::move(out));
}

bool decide_naive(RepairKind kind, Semantics sem,
                  const std::vector<std::vector<FactIndex>>& causes,
                  std::size_t nfacts, const std::vector<Conflict>& conflicts,
                  const PriorityRelation& prio) {
  if (causes.empty()) return false;
  std::vector<FactMask> family = repair_family(kind, nfacts, conflicts, prio);
  std::vector<FactMask> cmasks;
  cmasks.reserve(causes.size());
  for (const auto& c : causes) {
    FactMask m = 0;
    for (FactIndex f : c) m |= bit(f);
    cmasks.push_back(m);
  }
  auto entails = [&](FactMask r) {
    for (FactMask m : cmasks)
      if ((r & m) == m) return true;
    return false;
  };
  switch (sem) {
    case Semantics::Brave:
      return std::any_of(family.begin(), family.end(), entails);
    case Semantics::AR:
      return std::all_of(family.begin(), family.end(), entails);
    case Semantics::IAR: {
      FactMask inter = ~FactMask{0};
      for (FactMask r : family) inter &= r;
      return entails(inter);
    }
  }
  return false;
}

}  // namespace priorepair
