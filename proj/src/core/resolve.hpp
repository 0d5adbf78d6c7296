#pragma once

// Cycle resolution for leveled preference graphs. The input assigns each
// directed edge the least level that induces it; each strategy returns an
// acyclic subset of the edges, sorted by (from, to).

#include <cstdint>
#include <vector>

namespace priorepair {

struct LeveledEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  int level = 1;

  friend bool operator==(const LeveledEdge&, const LeveledEdge&) = default;
  friend auto operator<=>(const LeveledEdge&, const LeveledEdge&) = default;
};

struct EdgeGraph {
  std::uint32_t nodes = 0;          // node ids are 0 .. nodes-1
  std::vector<LeveledEdge> edges;   // unique (from, to), levels >= 1

  int max_level() const;
};

enum class Strategy : std::uint8_t { Up, Down, RefinedUp, Grounded };

// Largest prefix-by-level union that stays acyclic: levels 1..k are kept
// where k+1 is the first level whose prefix has a cycle.
std::vector<LeveledEdge> resolve_up(const EdgeGraph& g);

// A level-i edge survives iff it lies on no cycle among edges of level <= i.
std::vector<LeveledEdge> resolve_down(const EdgeGraph& g);

// Level by level, keeps the level-i edges that lie on no cycle in
// kept-so-far union all level-i edges.
std::vector<LeveledEdge> resolve_refined_up(const EdgeGraph& g);

// Least fixpoint of the defense operator: an edge e is attacked through a
// back-path target(e) -> source(e) within a set of edges of level <=
// level(e); e is defended by A when every such path through non-A-attacked
// edges is broken. Stabilizes within max_level() rounds.
std::vector<LeveledEdge> resolve_grounded(const EdgeGraph& g);

std::vector<LeveledEdge> resolve(const EdgeGraph& g, Strategy s);

}  // namespace priorepair
