#include "core/conflicts.hpp"

#include <algorithm>
#include <set>

#include "core/match.hpp"

namespace priorepair {

std::vector<std::vector<FactIndex>> candidate_inconsistent_sets(const Dataset& data,
                                                                const std::vector<DenialConstraint>& dcs) {
  MetaDatabase no_meta;
  TaxonomyClosure no_tax(Taxonomy{}, data);
  MatchContext ctx{data, no_meta, no_tax};
  std::set<std::vector<FactIndex>> dedup;
  for (const DenialConstraint& dc : dcs) {
    std::vector<BodyLiteral> body = atoms_as_body(dc.atoms);
    for (const Comparison& c : dc.neqs) {
      BodyLiteral l;
      l.kind = BodyLiteral::Kind::Cmp;
      l.cmp = c;
      body.push_back(std::move(l));
    }
    match_body(body, ctx, {}, [&](const Match& m) {
      dedup.insert(m.support);
      return true;
    });
  }
  return {dedup.begin(), dedup.end()};
}

std::vector<FactIndex> self_inconsistent_facts(const Dataset& data, const std::vector<DenialConstraint>& dcs) {
  std::vector<FactIndex> out;
  for (const std::vector<FactIndex>& c : candidate_inconsistent_sets(data, dcs)) {
    if (c.size() == 1) out.push_back(c.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Conflict> minimize_candidates(std::vector<std::vector<FactIndex>> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Conflict> accepted;
  std::map<FactIndex, std::vector<std::size_t>> with_fact;  // fact -> accepted conflicts containing it
  for (std::vector<FactIndex>& cand : candidates) {
    bool minimal = true;
    // Accepted conflicts are no larger than cand; any subset must share every
    // one of its facts, so probing one inverted-index bucket per fact covers
    // all possible subsets.
    std::set<std::size_t> seen;
    for (FactIndex f : cand) {
      auto it = with_fact.find(f);
      if (it == with_fact.end()) continue;
      for (std::size_t ci : it->second) {
        if (!seen.insert(ci).second) continue;
        if (std::includes(cand.begin(), cand.end(), accepted[ci].begin(), accepted[ci].end())) {
          minimal = false;
          break;
        }
      }
      if (!minimal) break;
    }
    if (!minimal) continue;
    std::size_t idx = accepted.size();
    for (FactIndex f : cand) with_fact[f].push_back(idx);
    accepted.push_back(std::move(cand));
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

std::vector<Conflict> conflicts(const Dataset& data, const std::vector<DenialConstraint>& dcs) {
  std::vector<std::vector<FactIndex>> cands = candidate_inconsistent_sets(data, dcs);
  std::size_t max_atoms = 0;
  for (const DenialConstraint& dc : dcs) max_atoms = std::max(max_atoms, dc.atoms.size());
  if (max_atoms <= 2) {
    // Candidates have at most two facts: a pair is non-minimal exactly when
    // it contains a singleton candidate.
    std::set<FactIndex> singletons;
    for (const auto& c : cands) {
      if (c.size() == 1) singletons.insert(c.front());
    }
    std::vector<Conflict> out;
    for (auto& c : cands) {
      if (c.size() == 1 || (c.size() == 2 && !singletons.count(c[0]) && !singletons.count(c[1]))) {
        out.push_back(std::move(c));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  return minimize_candidates(std::move(cands));
}

}  // namespace priorepair
