#include "core/json_out.hpp"

#include <algorithm>

namespace priorepair {
namespace {

bool id_seq_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), token_less);
}

nlohmann::json sorted_id_sets(const Dataset& data, const std::vector<std::vector<FactIndex>>& sets) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(sets.size());
  for (const auto& set : sets) {
    std::vector<std::string> ids;
    ids.reserve(set.size());
    for (FactIndex f : set) ids.push_back(data.id(f));
    std::sort(ids.begin(), ids.end(), token_less);
    rows.push_back(std::move(ids));
  }
  std::sort(rows.begin(), rows.end(), id_seq_less);
  nlohmann::json arr = nlohmann::json::array();
  for (auto& row : rows) arr.push_back(row);
  return arr;
}

nlohmann::json constant_json(const Constant& c) {
  if (c.kind == Constant::Kind::Int) return c.num;
  return c.sym;
}

}  // namespace

nlohmann::json conflicts_json(const Dataset& data, const std::vector<Conflict>& conflicts) {
  return sorted_id_sets(data, conflicts);
}

nlohmann::json repairs_json(const Dataset& data, const std::vector<std::vector<FactIndex>>& repairs) {
  return sorted_id_sets(data, repairs);
}

nlohmann::json priority_json(const Dataset& data, const PriorityRelation& prio) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(prio.pairs.size());
  for (const auto& [from, to] : prio.pairs) rows.emplace_back(data.id(from), data.id(to));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return token_less(a.first, b.first);
    return token_less(a.second, b.second);
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [from, to] : rows) arr.push_back({{"from", from}, {"to", to}});
  return arr;
}

nlohmann::json answers_json(const std::string& query, const std::vector<QueryAnswer>& answers) {
  std::vector<const QueryAnswer*> rows;
  rows.reserve(answers.size());
  for (const QueryAnswer& a : answers) rows.push_back(&a);
  std::sort(rows.begin(), rows.end(), [](const QueryAnswer* a, const QueryAnswer* b) { return a->tuple < b->tuple; });
  nlohmann::json arr = nlohmann::json::array();
  for (const QueryAnswer* a : rows) {
    nlohmann::json tuple = nlohmann::json::array();
    for (const Constant& c : a->tuple) tuple.push_back(constant_json(c));
    arr.push_back({{"query", query}, {"tuple", std::move(tuple)}, {"entailed", a->entailed}});
  }
  return arr;
}

std::string render_lines(const nlohmann::json& arr, bool pretty) {
  std::string out;
  for (const auto& el : arr) {
    out += pretty ? el.dump(2) : el.dump();
    out += "\n";
  }
  return out;
}

}  // namespace priorepair
