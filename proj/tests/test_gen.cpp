#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "core/conflicts.hpp"
#include "core/gen.hpp"
#include "core/parse.hpp"
#include "core/prefeval.hpp"
#include "core/resolve.hpp"

using namespace priorepair;

namespace {

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

TEST_CASE("same seed, same output") {
  GenParams p;
  p.facts = 200;
  p.conflict_rate = 0.3;
  p.max_conflict_arity = 3;
  p.levels = 2;
  p.pref_density = 0.5;
  p.seed = 42;
  GenOutput a = generate(p);
  GenOutput b = generate(p);
  CHECK(a.dkb == b.dkb);
  CHECK(a.dc == b.dc);
  CHECK(a.meta == b.meta);
  CHECK(a.prefs == b.prefs);

  p.seed = 43;
  GenOutput c = generate(p);
  CHECK(a.dkb != c.dkb);
}

TEST_CASE("conflict budget is honored") {
  GenParams p;
  p.facts = 20;
  p.conflict_rate = 0.5;
  p.max_conflict_arity = 2;
  p.seed = 7;
  GenOutput out = generate(p);

  CHECK(starts_with(out.dkb, "1 | K2A(1)\n"));
  CHECK(out.dkb.find("11 | F(11)\n") != std::string::npos);
  CHECK(count_lines(out.dkb) == 20);

  Dataset data = parse_dataset(out.dkb);
  auto cs = conflicts(data, parse_constraints(out.dc));
  REQUIRE(cs.size() == 5);  // ten conflicting facts in pairs
  std::size_t covered = 0;
  for (const Conflict& c : cs) {
    CHECK(c.size() == 2);
    covered += c.size();
  }
  CHECK(covered == 10);

  // An odd budget leaves the last slot unused rather than emitting a
  // singleton group.
  p.facts = 21;
  GenOutput odd = generate(p);
  Dataset odd_data = parse_dataset(odd.dkb);
  auto odd_cs = conflicts(odd_data, parse_constraints(odd.dc));
  covered = 0;
  for (const Conflict& c : odd_cs) covered += c.size();
  CHECK(covered == 10);
}

TEST_CASE("zero rate means no constraints") {
  GenParams p;
  p.facts = 12;
  p.conflict_rate = 0.0;
  p.max_conflict_arity = 2;
  p.seed = 1;
  GenOutput out = generate(p);
  CHECK(out.dc.empty());
  Dataset data = parse_dataset(out.dkb);
  CHECK(data.size() == 12);
  CHECK(conflicts(data, parse_constraints(out.dc)).empty());
}

TEST_CASE("wide conflicts stay within the arity bound") {
  GenParams p;
  p.facts = 40;
  p.conflict_rate = 1.0;
  p.max_conflict_arity = 4;
  p.seed = 99;
  GenOutput out = generate(p);
  Dataset data = parse_dataset(out.dkb);
  auto cs = conflicts(data, parse_constraints(out.dc));
  REQUIRE_FALSE(cs.empty());
  std::size_t covered = 0;
  for (const Conflict& c : cs) {
    CHECK(c.size() >= 2);
    CHECK(c.size() <= 4);
    covered += c.size();
  }
  CHECK(covered >= 39);
  CHECK(covered <= 40);
}

TEST_CASE("generated ranks feed the priority pipeline") {
  GenParams p;
  p.facts = 30;
  p.conflict_rate = 0.4;
  p.max_conflict_arity = 2;
  p.levels = 2;
  p.pref_density = 1.0;
  p.seed = 5;
  GenOutput out = generate(p);

  CHECK(count_lines(out.meta) == 60);  // every fact ranked on both levels
  CHECK(out.prefs.find("[level 1]") != std::string::npos);
  CHECK(out.prefs.find("[level 2]") != std::string::npos);

  Dataset data = parse_dataset(out.dkb);
  MetaDatabase meta = parse_meta(out.meta, data);
  auto cs = conflicts(data, parse_constraints(out.dc));
  auto rules = parse_rules(out.prefs);
  auto stmts = evaluate_rules_on_pairs(rules, data, meta, TaxonomyClosure(Taxonomy{}, data),
                                       conflicting_pairs(cs));
  CHECK(!stmts.empty());

  // The per-level ranks are drawn independently, so levels may disagree;
  // every strategy must still resolve the induced graph to an acyclic
  // relation.
  EdgeGraph g;
  g.nodes = data.size();
  for (const PrefStatement& s : stmts) g.edges.push_back({s.from, s.to, s.level});
  std::sort(g.edges.begin(), g.edges.end());
  for (Strategy s : {Strategy::Up, Strategy::Down, Strategy::RefinedUp, Strategy::Grounded}) {
    std::vector<std::pair<FactIndex, FactIndex>> kept;
    for (const LeveledEdge& e : resolve(g, s)) kept.emplace_back(e.from, e.to);
    CHECK(pairs_acyclic(kept));
  }

  p.pref_density = 0.0;
  GenOutput sparse = generate(p);
  CHECK(sparse.meta.empty());
}

TEST_CASE("parameters are validated") {
  GenParams p;
  p.facts = 10;
  p.conflict_rate = 0.5;
  p.max_conflict_arity = 2;

  GenParams bad = p;
  bad.facts = 0;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = p;
  bad.conflict_rate = -0.1;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
  bad.conflict_rate = 1.1;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = p;
  bad.levels = 0;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = p;
  bad.pref_density = 1.5;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  bad = p;
  bad.max_conflict_arity = 1;  // incompatible with a positive rate
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
  bad.conflict_rate = 0.0;
  CHECK_NOTHROW(generate(bad));
}
