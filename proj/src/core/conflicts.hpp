#pragma once

// Conflict computation: candidate inconsistent sets are the homomorphism
// supports of the denial constraints; conflicts are the inclusion-minimal
// candidates.

#include <vector>

#include "core/kb.hpp"

namespace priorepair {

// One set per constraint-body match support, deduped; each set sorted.
// Deterministic order: sorted lexicographically.
std::vector<std::vector<FactIndex>> candidate_inconsistent_sets(const Dataset& data,
                                                                const std::vector<DenialConstraint>& dcs);

// Facts that are inconsistent on their own (singleton candidates); sorted.
std::vector<FactIndex> self_inconsistent_facts(const Dataset& data, const std::vector<DenialConstraint>& dcs);

// Inclusion-minimal inconsistent subsets, sorted lexicographically.
std::vector<Conflict> conflicts(const Dataset& data, const std::vector<DenialConstraint>& dcs);

// Minimization step on deduped candidates (exposed for tests).
std::vector<Conflict> minimize_candidates(std::vector<std::vector<FactIndex>> candidates);

}  // namespace priorepair
