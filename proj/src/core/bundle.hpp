#pragma once

// One loaded knowledge base with everything the frontends need: parsed
// inputs, the taxonomy closure, and the derived pipeline steps (conflicts,
// priority, answers) behind simple calls.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/kb.hpp"
#include "core/resolve.hpp"
#include "core/semantics.hpp"

namespace priorepair {

struct KbBundle {
  Dataset data;
  MetaDatabase meta;
  Taxonomy tax;
  TaxonomyClosure tax_closure;
  std::vector<DenialConstraint> constraints;
  std::vector<QueryRewriting> queries;
  std::vector<PreferenceRule> rules;
};

// Parses the six inputs; an empty string is an empty input. ParseError
// messages are prefixed with the input kind.
KbBundle load_bundle(const std::string& dkb_text, const std::string& meta_text, const std::string& dc_text,
                     const std::string& ucq_text, const std::string& prefs_text, const std::string& tax_text);

std::optional<Strategy> strategy_from(std::string_view name);      // u | d | ru | g
std::optional<RepairKind> repair_kind_from(std::string_view name); // S | P | C
std::optional<Semantics> semantics_from(std::string_view name);    // brave | AR | IAR

// Rules evaluated on the conflicting pairs, cycles resolved per strategy.
PriorityRelation compute_priority(const KbBundle& kb, const std::vector<Conflict>& conflicts, Strategy strategy);

}  // namespace priorepair
