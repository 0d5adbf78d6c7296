#include "core/bundle.hpp"

#include <algorithm>

#include "core/parse.hpp"
#include "core/prefeval.hpp"

namespace priorepair {
namespace {

template <typename F>
auto parse_named(const char* kind, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    Diagnostic d = e.diag;
    d.message = std::string(kind) + ": " + d.message;
    throw ParseError(std::move(d));
  }
}

}  // namespace

KbBundle load_bundle(const std::string& dkb_text, const std::string& meta_text, const std::string& dc_text,
                     const std::string& ucq_text, const std::string& prefs_text, const std::string& tax_text) {
  KbBundle kb;
  kb.data = parse_named("dataset", [&] { return parse_dataset(dkb_text); });
  kb.meta = parse_named("meta", [&] { return parse_meta(meta_text, kb.data); });
  kb.constraints = parse_named("constraints", [&] { return parse_constraints(dc_text); });
  kb.queries = parse_named("queries", [&] { return parse_queries(ucq_text); });
  kb.rules = parse_named("rules", [&] { return parse_rules(prefs_text); });
  kb.tax = parse_named("taxonomy", [&] { return parse_taxonomy(tax_text); });
  kb.tax_closure = TaxonomyClosure(kb.tax, kb.data);
  return kb;
}

std::optional<Strategy> strategy_from(std::string_view name) {
  if (name == "u") return Strategy::Up;
  if (name == "d") return Strategy::Down;
  if (name == "ru") return Strategy::RefinedUp;
  if (name == "g") return Strategy::Grounded;
  return std::nullopt;
}

std::optional<RepairKind> repair_kind_from(std::string_view name) {
  if (name == "S") return RepairKind::Subset;
  if (name == "P") return RepairKind::Pareto;
  if (name == "C") return RepairKind::Completion;
  return std::nullopt;
}

std::optional<Semantics> semantics_from(std::string_view name) {
  if (name == "brave") return Semantics::Brave;
  if (name == "AR") return Semantics::AR;
  if (name == "IAR") return Semantics::IAR;
  return std::nullopt;
}

PriorityRelation compute_priority(const KbBundle& kb, const std::vector<Conflict>& conflicts, Strategy strategy) {
  std::vector<PrefStatement> stmts =
      evaluate_rules_on_pairs(kb.rules, kb.data, kb.meta, kb.tax_closure, conflicting_pairs(conflicts));
  EdgeGraph g;
  g.nodes = kb.data.size();
  g.edges.reserve(stmts.size());
  for (const PrefStatement& s : stmts) g.edges.push_back({s.from, s.to, s.level});
  std::vector<LeveledEdge> kept = resolve(g, strategy);
  PriorityRelation prio;
  prio.pairs.reserve(kept.size());
  for (const LeveledEdge& e : kept) prio.pairs.emplace_back(e.from, e.to);
  std::sort(prio.pairs.begin(), prio.pairs.end());
  prio.pairs.erase(std::unique(prio.pairs.begin(), prio.pairs.end()), prio.pairs.end());
  return prio;
}

}  // namespace priorepair
