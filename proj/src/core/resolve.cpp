#include "core/resolve.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace priorepair {

int EdgeGraph::max_level() const {
  int m = 0;
  for (const auto& e : edges) m = std::max(m, e.level);
  return m;
}

namespace {

// Tarjan over the subgraph of edges with keep[i] != 0. Returns a component
// id per node; nodes with no kept incident edge get singleton components.
std::vector<int> scc_components(std::uint32_t nodes,
                                const std::vector<LeveledEdge>& edges,
                                const std::vector<char>& keep) {
  std::vector<std::vector<std::uint32_t>> adj(nodes);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) adj[edges[i].from].push_back(edges[i].to);

  std::vector<int> comp(nodes, -1), low(nodes, 0), index(nodes, -1);
  std::vector<char> on_stack(nodes, 0);
  std::vector<std::uint32_t> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t edge_pos;
  };
  std::vector<Frame> frames;

  for (std::uint32_t root = 0; root < nodes; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      std::uint32_t v = f.node;
      if (f.edge_pos < adj[v].size()) {
        std::uint32_t w = adj[v][f.edge_pos++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
          } while (w != v);
          ++next_comp;
        }
        frames.pop_back();
        if (!frames.empty()) {
          std::uint32_t parent = frames.back().node;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return comp;
}

// A directed graph has a cycle iff some kept edge has both endpoints in one
// strongly connected component (self-loops included).
bool has_cycle(std::uint32_t nodes, const std::vector<LeveledEdge>& edges,
               const std::vector<char>& keep) {
  std::vector<int> comp = scc_components(nodes, edges, keep);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i] && comp[edges[i].from] == comp[edges[i].to]) return true;
  return false;
}

std::vector<LeveledEdge> collect_sorted(const std::vector<LeveledEdge>& edges,
                                        const std::vector<char>& keep) {
  std::vector<LeveledEdge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) out.push_back(edges[i]);
  std::sort(out.begin(), out.end(), [](const LeveledEdge& a, const LeveledEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  return out;
}

}  // namespace

std::vector<LeveledEdge> resolve_up(const EdgeGraph& g) {
  int n = g.max_level();
  std::vector<char> keep(g.edges.size(), 0);
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<char> trial(g.edges.size(), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      trial[i] = g.edges[i].level <= k;
    if (has_cycle(g.nodes, g.edges, trial)) break;
    best = k;
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    keep[i] = g.edges[i].level <= best;
  return collect_sorted(g.edges, keep);
}

std::vector<LeveledEdge> resolve_down(const EdgeGraph& g) {
  int n = g.max_level();
  std::vector<char> keep(g.edges.size(), 0);
  for (int i = 1; i <= n; ++i) {
    std::vector<char> upto(g.edges.size(), 0);
    for (std::size_t j = 0; j < g.edges.size(); ++j)
      upto[j] = g.edges[j].level <= i;
    std::vector<int> comp = scc_components(g.nodes, g.edges, upto);
    for (std::size_t j = 0; j < g.edges.size(); ++j)
      if (g.edges[j].level == i && comp[g.edges[j].from] != comp[g.edges[j].to])
        keep[j] = 1;
  }
  return collect_sorted(g.edges, keep);
}

std::vector<LeveledEdge> resolve_refined_up(const EdgeGraph& g) {
  int n = g.max_level();
  std::vector<char> kept(g.edges.size(), 0);
  for (int i = 1; i <= n; ++i) {
    std::vector<char> trial = kept;
    for (std::size_t j = 0; j < g.edges.size(); ++j)
      if (g.edges[j].level == i) trial[j] = 1;
    std::vector<int> comp = scc_components(g.nodes, g.edges, trial);
    for (std::size_t j = 0; j < g.edges.size(); ++j)
      if (g.edges[j].level == i && comp[g.edges[j].from] != comp[g.edges[j].to])
        kept[j] = 1;
  }
  return collect_sorted(g.edges, kept);
}

namespace {

// True when a path src -> dst exists using edges j with allowed(j); a
// zero-length path counts when src == dst.
template <typename Allowed>
bool path_exists(std::uint32_t nodes, const std::vector<LeveledEdge>& edges,
                 std::uint32_t src, std::uint32_t dst, Allowed allowed) {
  if (src == dst) return true;
  std::vector<std::vector<std::size_t>> out(nodes);
  for (std::size_t j = 0; j < edges.size(); ++j)
    if (allowed(j)) out[edges[j].from].push_back(j);
  std::vector<char> seen(nodes, 0);
  std::queue<std::uint32_t> q;
  q.push(src);
  seen[src] = 1;
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop();
    for (std::size_t j : out[v]) {
      std::uint32_t w = edges[j].to;
      if (w == dst) return true;
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  return false;
}

}  // namespace

std::vector<LeveledEdge> resolve_grounded(const EdgeGraph& g) {
  const std::size_t m = g.edges.size();
  std::vector<char> accepted(m, 0);
  for (;;) {
    // Edges countered by the accepted set: a back-path to -> from within it,
    // capped at the edge's level.
    std::vector<char> countered(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      countered[e] = path_exists(
          g.nodes, g.edges, g.edges[e].to, g.edges[e].from, [&](std::size_t j) {
            return accepted[j] && j != e && g.edges[j].level <= g.edges[e].level;
          });
    }
    // Defended edges: every back-path must pass through a countered edge.
    std::vector<char> next(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      next[e] = !path_exists(
          g.nodes, g.edges, g.edges[e].to, g.edges[e].from, [&](std::size_t j) {
            return !countered[j] && j != e && g.edges[j].level <= g.edges[e].level;
          });
    }
    if (next == accepted) break;
    accepted = std::move(next);
  }
  return collect_sorted(g.edges, accepted);
}

std::vector<LeveledEdge> resolve(const EdgeGraph& g, Strategy s) {
  switch (s) {
    case Strategy::Up: return resolve_up(g);
    case Strategy::Down: return resolve_down(g);
    case Strategy::RefinedUp: return resolve_refined_up(g);
    case Strategy::Grounded: return resolve_grounded(g);
  }
  assert(false);
  return {};
}

}  // namespace priorepair
