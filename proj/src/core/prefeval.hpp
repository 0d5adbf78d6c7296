#pragma once

// Preference-rule evaluation: grounds the rules against the knowledge base
// into preference statements between identified facts, restricts them to
// conflicting pairs, and checks acyclicity of the full induced relation.

#include <vector>

#include "core/kb.hpp"

namespace priorepair {

// All pairs induced by some rule, tagged with the least inducing level.
// Reflexive pairs are discarded; matches that bind a head variable to a
// non-identifier value induce nothing. Sorted by (from, to).
std::vector<PrefStatement> evaluate_rules(const std::vector<PreferenceRule>& rules, const Dataset& data,
                                          const MetaDatabase& meta, const TaxonomyClosure& tax);

// Keeps the statements whose facts co-occur in some conflict.
std::vector<PrefStatement> restrict_to_conflicts(const std::vector<PrefStatement>& stmts,
                                                 const std::vector<Conflict>& conflicts);

// Same result as restrict_to_conflicts(evaluate_rules(...)) but evaluated by
// seeding each rule with each ordered conflicting pair, so the cost scales
// with the number of conflicting pairs rather than with the full join of the
// rule bodies.
std::vector<PrefStatement> evaluate_rules_on_pairs(const std::vector<PreferenceRule>& rules, const Dataset& data,
                                                   const MetaDatabase& meta, const TaxonomyClosure& tax,
                                                   const std::set<std::pair<FactIndex, FactIndex>>& pairs);

struct AcyclicityResult {
  bool acyclic = true;
  std::vector<PrefStatement> cycle;  // a directed cycle when !acyclic: from(i+1) == to(i), wrapping
};

// Checks the full (unrestricted) induced relation for directed cycles.
AcyclicityResult strong_acyclicity_instance(const std::vector<PrefStatement>& stmts);

}  // namespace priorepair
