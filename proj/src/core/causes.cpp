#include "core/causes.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "core/match.hpp"

namespace priorepair {

std::vector<AnswerCauses> candidate_causes(const Dataset& data, const QueryRewriting& query,
                                           const std::vector<FactIndex>& self_inconsistent) {
  MetaDatabase no_meta;
  TaxonomyClosure no_tax(Taxonomy{}, data);
  MatchContext ctx{data, no_meta, no_tax};
  std::map<std::vector<Constant>, std::set<std::vector<FactIndex>>> by_tuple;
  for (const QueryRewriting::CQ& body : query.bodies) {
    std::vector<BodyLiteral> lits = atoms_as_body(body.atoms);
    match_body(lits, ctx, {}, [&](const Match& m) {
      std::vector<Constant> tuple;
      tuple.reserve(body.answer_vars.size());
      for (const std::string& v : body.answer_vars) {
        auto it = m.binding.find(v);
        assert(it != m.binding.end() && it->second.kind == Value::Kind::Const);
        tuple.push_back(it->second.c);
      }
      bool tainted = std::any_of(m.support.begin(), m.support.end(), [&](FactIndex f) {
        return std::binary_search(self_inconsistent.begin(), self_inconsistent.end(), f);
      });
      auto& sets = by_tuple[std::move(tuple)];
      if (!tainted) sets.insert(m.support);
      return true;
    });
  }
  std::vector<AnswerCauses> out;
  out.reserve(by_tuple.size());
  for (auto& [tuple, sets] : by_tuple) {
    out.push_back({tuple, {sets.begin(), sets.end()}});
  }
  return out;
}

std::vector<AnswerCauses> exact_causes(const Dataset& data, const QueryRewriting& query,
                                       const std::vector<FactIndex>& self_inconsistent,
                                       const std::vector<Conflict>& conflicts) {
  std::vector<AnswerCauses> out = candidate_causes(data, query, self_inconsistent);
  for (AnswerCauses& ac : out) {
    std::vector<std::vector<FactIndex>> consistent;
    for (std::vector<FactIndex>& cand : ac.causes) {
      bool has_conflict = std::any_of(conflicts.begin(), conflicts.end(), [&](const Conflict& c) {
        return std::includes(cand.begin(), cand.end(), c.begin(), c.end());
      });
      if (!has_conflict) consistent.push_back(std::move(cand));
    }
    // Inclusion-minimal survivors; candidates are sorted by size first so a
    // linear sweep against accepted sets suffices.
    std::sort(consistent.begin(), consistent.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    std::vector<std::vector<FactIndex>> minimal;
    for (std::vector<FactIndex>& cand : consistent) {
      bool is_minimal = std::none_of(minimal.begin(), minimal.end(), [&](const std::vector<FactIndex>& m) {
        return std::includes(cand.begin(), cand.end(), m.begin(), m.end());
      });
      if (is_minimal) minimal.push_back(std::move(cand));
    }
    std::sort(minimal.begin(), minimal.end());
    ac.causes = std::move(minimal);
  }
  return out;
}

}  // namespace priorepair
