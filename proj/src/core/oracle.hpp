#pragma once

// Brute-force reference implementations. These trade scale for obviousness:
// repairs are enumerated as bitmasks (dataset capped), completions as
// explicit orientation choices (pair count capped), and the graph strategies
// are recomputed from first principles. The engine is tested against them.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core/kb.hpp"
#include "core/resolve.hpp"
#include "core/semantics.hpp"

namespace priorepair {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration caps; the PRIOREPAIR_ORACLE_CAP environment variable overrides
// both. The fact cap never exceeds 64 (one bitmask word).
std::size_t oracle_fact_cap();   // default 20
std::size_t oracle_pair_cap();   // default 16

using FactMask = std::uint64_t;

// All inclusion-maximal consistent subsets of facts 0..nfacts-1, ascending.
// Throws CapExceeded when nfacts exceeds the fact cap.
std::vector<FactMask> enumerate_repairs(std::size_t nfacts,
                                        const std::vector<Conflict>& conflicts);

// The repairs no consistent subset improves on: an improvement brings in a
// fact preferred to everything it drops.
std::vector<FactMask> pareto_optimal(std::size_t nfacts,
                                     const std::vector<Conflict>& conflicts,
                                     const std::vector<FactMask>& repairs,
                                     const PriorityRelation& prio);

// Union over every acyclic total orientation of the conflicting pairs
// (extending prio) of that orientation's improvement-optimal repairs. Throws
// CapExceeded when the number of unoriented pairs exceeds the pair cap.
std::vector<FactMask> completion_optimal(std::size_t nfacts,
                                         const std::vector<Conflict>& conflicts,
                                         const std::vector<FactMask>& repairs,
                                         const PriorityRelation& prio);

std::vector<FactMask> repair_family(RepairKind kind, std::size_t nfacts,
                                    const std::vector<Conflict>& conflicts,
                                    const PriorityRelation& prio);

// Reference strategy computations (matrix closures, explicit cycles) that
// must agree with resolve_up / resolve_down / resolve_grounded.
std::vector<LeveledEdge> oracle_poss(const EdgeGraph& g);
std::vector<LeveledEdge> oracle_nondef(const EdgeGraph& g);
std::vector<LeveledEdge> oracle_grd(const EdgeGraph& g);

// The highest-level-first removal of edges lying on cycles, taken literally;
// must agree with resolve_down.
std::vector<LeveledEdge> oracle_down_removal_loop(const EdgeGraph& g);

// Entailment by explicit repair enumeration; must agree with decide().
bool decide_naive(RepairKind kind, Semantics sem,
                  const std::vector<std::vector<FactIndex>>& causes,
                  std::size_t nfacts, const std::vector<Conflict>& conflicts,
                  const PriorityRelation& prio);

}  // namespace priorepair
