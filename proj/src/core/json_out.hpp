#pragma once

// JSON views of the engine's results. Identifiers render as strings in their
// file spelling; data constants render as numbers or strings. Every array is
// sorted so equal inputs give byte-equal output.

#include <string>
#include <vector>

#include <json.hpp>

#include "core/kb.hpp"
#include "core/semantics.hpp"

namespace priorepair {

// [["id", ...], ...] — ids sorted within each set, sets sorted.
nlohmann::json conflicts_json(const Dataset& data, const std::vector<Conflict>& conflicts);
nlohmann::json repairs_json(const Dataset& data, const std::vector<std::vector<FactIndex>>& repairs);

// [{"from": id, "to": id}, ...] sorted by (from, to).
nlohmann::json priority_json(const Dataset& data, const PriorityRelation& prio);

// [{"query": name, "tuple": [...], "entailed": bool}, ...] sorted by tuple.
nlohmann::json answers_json(const std::string& query, const std::vector<QueryAnswer>& answers);

// One array element per line; pretty switches to indented documents.
std::string render_lines(const nlohmann::json& arr, bool pretty);

}  // namespace priorepair
