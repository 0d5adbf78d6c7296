#pragma once

// Query answering over inconsistent datasets. A repair is an inclusion-
// maximal consistent subset; the Pareto and completion variants narrow the
// repair family using an acyclic priority relation over conflicting facts.
// Entailment is decided per answer tuple with a SAT encoding restricted to
// the facts reachable from the tuple's causes through attacks.

#include <cstdint>
#include <vector>

#include "core/kb.hpp"

namespace priorepair {

enum class RepairKind : std::uint8_t { Subset, Pareto, Completion };
enum class Semantics : std::uint8_t { Brave, AR, IAR };

const char* repair_kind_name(RepairKind k);
const char* semantics_name(Semantics s);

// att[ci][j]: conflict ci attacks its j-th member, which holds when that
// member is not preferred to any other member of ci.
struct AttackRelation {
  std::vector<std::vector<char>> att;
};

AttackRelation attack_relation(const std::vector<Conflict>& conflicts,
                               const PriorityRelation& prio);

// Facts reachable from the causes' facts: whenever a conflict attacks a
// reachable fact, all of the conflict's members become reachable. Sorted.
std::vector<FactIndex> localize(const std::vector<std::vector<FactIndex>>& causes,
                                const std::vector<Conflict>& conflicts,
                                const AttackRelation& att);

// True when the answer backed by the given causes holds under the repair
// family and entailment mode. The priority must be acyclic; it is ignored
// for RepairKind::Subset.
bool decide(RepairKind kind, Semantics sem,
            const std::vector<std::vector<FactIndex>>& causes,
            const std::vector<Conflict>& conflicts,
            const PriorityRelation& prio);

struct QueryAnswer {
  std::vector<Constant> tuple;
  bool entailed = false;
};

// Evaluates every answer tuple of the query; tuples are sorted. exact_causes
// switches the cause computation from match supports to their minimal
// consistent subsets (the verdicts agree; the flag exists for testing).
// jobs > 1 decides tuples in parallel.
std::vector<QueryAnswer> answer_query(const Dataset& data,
                                      const QueryRewriting& query,
                                      const std::vector<Conflict>& conflicts,
                                      const PriorityRelation& prio,
                                      RepairKind kind, Semantics sem,
                                      int jobs = 1, bool exact_causes = false);

}  // namespace priorepair
