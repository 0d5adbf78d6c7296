#pragma once

// Text generation of the answer-set programs for external solvers: the input
// encodings (facts, conflicts, causes, preference rules), the four
// cycle-resolution programs, conflict minimization, and the per-semantics
// filter programs. Output is solver-agnostic ASP-Core-style rule text.

#include <stdexcept>
#include <string>
#include <vector>

#include "core/kb.hpp"
#include "core/resolve.hpp"
#include "core/semantics.hpp"

namespace priorepair {

struct EmitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AspInput {
  std::string data;         // data(i). p(i,...). facts plus the name mapping
  std::string meta;         // side-information facts
  std::string constraints;  // conf_init / inConf_init rules
  std::string causes;       // cause / inCause rules for one query
  std::string prefs;        // pref_init rules and level facts
  std::vector<std::string> warnings;
};

// Renders the knowledge base as the five input programs. Names are lowercased
// into solver-safe tokens (prefixed on clashes) with the reversible mapping
// appended to the data program as comments; a constant that cannot be made
// solver-safe raises EmitError. Predicate variables in rules are expanded
// over the taxonomy here, and taxonomy literals are consumed by that
// expansion. Rules a strict solver would reject as unsafe (negated atoms
// whose identifier variable occurs nowhere else) are emitted verbatim and
// reported in warnings.
AspInput emit_input(const Dataset& data, const MetaDatabase& meta,
                    const std::vector<DenialConstraint>& dcs,
                    const QueryRewriting& query,
                    const std::vector<PreferenceRule>& rules,
                    const Taxonomy& tax);

// The cycle-resolution program for one strategy, as fixed rule text.
std::string emit_priority(Strategy s);

// Conflict minimization: conf / inConf from conf_init / inConf_init.
std::string emit_minconf();

// The filter program deciding one (repair family, entailment mode) pair,
// assembled from the attack, localization, consistency, mode, and family
// blocks; the IAR variants thread the cause identifier through.
std::string emit_semantics(RepairKind kind, Semantics sem);

}  // namespace priorepair
