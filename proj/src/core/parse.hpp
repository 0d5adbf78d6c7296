#pragma once

// Parsers and serializers for the five text formats:
//   .dkb    identified facts            <id> | <Pred>(<const>, ...)
//   .meta   annotations on facts        <Pred>(<arg>, ...)   arg = #<id> | constant
//   .dc     denial constraints          <atom>, ..., <var> != <term>, ... -> bot
//   .ucq    query rewritings            <name>(<vars>) <- <atom>, ...
//   .prefs  leveled preference rules    [level <k>] headers and pref(v1,v2) <- <lit>, ...
//   .tax    taxonomy edges              <Pred> < <Pred>
//
// Shared conventions: `#` starts a comment (in .meta an in-parens `#` glued
// to a token is a fact reference instead); blank lines are skipped; tokens
// are made of [A-Za-z0-9_'] and non-ASCII bytes; a term token is a variable
// iff it matches [u-z][0-9]* and `_` is an anonymous variable, fresh per
// occurrence; predicate names start with an ASCII uppercase letter.
// serialize_* followed by the matching parse_* reproduces an equal value.

#include <string>
#include <vector>

#include "core/diag.hpp"
#include "core/kb.hpp"

namespace priorepair {

bool is_variable_name(const std::string& tok);
bool is_predicate_name(const std::string& tok);

Dataset parse_dataset(const std::string& text);
MetaDatabase parse_meta(const std::string& text, const Dataset& data);
std::vector<DenialConstraint> parse_constraints(const std::string& text);
std::vector<QueryRewriting> parse_queries(const std::string& text);
std::vector<PreferenceRule> parse_rules(const std::string& text);
Taxonomy parse_taxonomy(const std::string& text);

std::string serialize_dataset(const Dataset& data);
std::string serialize_meta(const MetaDatabase& meta, const Dataset& data);
std::string serialize_constraints(const std::vector<DenialConstraint>& dcs);
std::string serialize_queries(const std::vector<QueryRewriting>& queries);
std::string serialize_rules(const std::vector<PreferenceRule>& rules);
std::string serialize_taxonomy(const Taxonomy& tax);

}  // namespace priorepair
