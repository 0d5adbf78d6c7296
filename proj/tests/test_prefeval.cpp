#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "core/conflicts.hpp"
#include "core/parse.hpp"
#include "core/prefeval.hpp"
#include "util.hpp"

using namespace priorepair;

namespace {

struct Loaded {
  Dataset data;
  MetaDatabase meta;
  Taxonomy tax;
  std::vector<DenialConstraint> dcs;
  std::vector<PreferenceRule> rules;
};

Loaded load(const std::string& dkb, const std::string& meta, const std::string& dc, const std::string& prefs,
            const std::string& tax = {}) {
  Loaded l;
  l.data = parse_dataset(dkb);
  l.meta = parse_meta(meta, l.data);
  l.dcs = parse_constraints(dc);
  l.rules = parse_rules(prefs);
  l.tax = parse_taxonomy(tax);
  return l;
}

std::set<std::pair<std::string, std::string>> stmt_ids(const Dataset& data, const std::vector<PrefStatement>& ss) {
  std::set<std::pair<std::string, std::string>> out;
  for (const PrefStatement& s : ss) out.emplace(data.id(s.from), data.id(s.to));
  return out;
}

}  // namespace

TEST_CASE("running example rules induce the expected statements") {
  Loaded l = load(testutil::fixture("ex.dkb"), testutil::fixture("ex.meta"), testutil::fixture("ex.dc"),
                  testutil::fixture("ex.prefs"), testutil::fixture("ex.tax"));
  TaxonomyClosure tc(l.tax, l.data);
  auto stmts = evaluate_rules(l.rules, l.data, l.meta, tc);
  CHECK(stmt_ids(l.data, stmts) ==
        std::set<std::pair<std::string, std::string>>{{"2", "1"}, {"2", "3"}, {"1", "3"}, {"6", "7"}});
  for (const PrefStatement& s : stmts) CHECK(s.level == 1);

  auto cs = conflicts(l.data, l.dcs);
  CHECK(restrict_to_conflicts(stmts, cs) == stmts);  // all four pairs conflict

  auto seeded = evaluate_rules_on_pairs(l.rules, l.data, l.meta, tc, conflicting_pairs(cs));
  CHECK(seeded == stmts);

  CHECK(strong_acyclicity_instance(stmts).acyclic);
}

TEST_CASE("id-binding rules induce the expected statements") {
  Loaded l = load(testutil::fixture("ex.dkb"), testutil::fixture("ex.meta"), testutil::fixture("ex.dc"),
                  testutil::fixture("exfig.prefs"), testutil::fixture("ex.tax"));
  TaxonomyClosure tc(l.tax, l.data);
  auto stmts = evaluate_rules(l.rules, l.data, l.meta, tc);
  CHECK(stmt_ids(l.data, stmts) ==
        std::set<std::pair<std::string, std::string>>{{"5", "4"}, {"1", "3"}, {"6", "7"}});
}

TEST_CASE("statements between non-conflicting facts are dropped") {
  Loaded l = load("1 | P(a)\n2 | P(b)\n3 | R(c)\n",
                  "Val(#1, 1)\nVal(#3, 2)\n",
                  "P(x), P(y), x != y -> bot\n",
                  "pref(x1, x2) <- Val(x1, y1), Val(x2, y2), y1 < y2\n");
  TaxonomyClosure tc(l.tax, l.data);
  auto stmts = evaluate_rules(l.rules, l.data, l.meta, tc);
  CHECK(stmt_ids(l.data, stmts) == std::set<std::pair<std::string, std::string>>{{"1", "3"}});

  auto cs = conflicts(l.data, l.dcs);
  CHECK(restrict_to_conflicts(stmts, cs).empty());
  CHECK(evaluate_rules_on_pairs(l.rules, l.data, l.meta, tc, conflicting_pairs(cs)).empty());
}

TEST_CASE("levels take the least inducing rule") {
  Loaded l = load("1 | P(a)\n2 | P(b)\n",
                  "Val(#1, 1)\nVal(#2, 2)\n",
                  "P(x), P(y), x != y -> bot\n",
                  "[level 1]\npref(x1, x2) <- Val(x1, y1), Val(x2, y2), y1 < y2\n"
                  "[level 2]\npref(x1, x2) <- Val(x1, y1), Val(x2, y2), y1 < y2\n"
                  "[level 3]\npref(x1, x2) <- Val(x1, y1), Val(x2, y2), y1 > y2\n");
  TaxonomyClosure tc(l.tax, l.data);
  auto stmts = evaluate_rules(l.rules, l.data, l.meta, tc);
  REQUIRE(stmts.size() == 2);
  CHECK(stmts[0].from == 0);
  CHECK(stmts[0].level == 1);  // induced at levels 1 and 2; the least wins
  CHECK(stmts[1].from == 1);
  CHECK(stmts[1].level == 3);

  auto seeded = evaluate_rules_on_pairs(l.rules, l.data, l.meta, tc, conflicting_pairs(conflicts(l.data, l.dcs)));
  CHECK(seeded == stmts);
}

TEST_CASE("reflexive and non-identifier bindings induce nothing") {
  Loaded l = load("1 | P(a)\n2 | P(b)\n",
                  "Val(#1, 1)\nVal(#2, 1)\n",
                  "P(x), P(y), x != y -> bot\n",
                  // y1 <= y2 admits x1 = x2; those matches must not surface.
                  "pref(x1, x2) <- Val(x1, y1), Val(x2, y2), y1 <= y2\n"
                  "pref(x1, x2) <- P(x1), P(x2)\n");
  TaxonomyClosure tc(l.tax, l.data);
  auto stmts = evaluate_rules(l.rules, l.data, l.meta, tc);
  for (const PrefStatement& s : stmts) CHECK(s.from != s.to);
  // The first rule yields both directions (equal values); the second rule
  // binds the head to constants, not identifiers, and yields nothing.
  CHECK(stmt_ids(l.data, stmts) == std::set<std::pair<std::string, std::string>>{{"1", "2"}, {"2", "1"}});
}

TEST_CASE("acyclicity witness is a real cycle") {
  std::vector<PrefStatement> stmts = {{0, 1, 1}, {1, 2, 1}, {2, 0, 2}, {3, 0, 1}};
  auto res = strong_acyclicity_instance(stmts);
  REQUIRE_FALSE(res.acyclic);
  REQUIRE(res.cycle.size() >= 2);
  for (std::size_t i = 0; i < res.cycle.size(); ++i) {
    CHECK(res.cycle[i].to == res.cycle[(i + 1) % res.cycle.size()].from);
  }
  CHECK(strong_acyclicity_instance({{0, 1, 1}, {1, 2, 1}, {0, 2, 2}}).acyclic);
  CHECK(strong_acyclicity_instance({}).acyclic);
}

TEST_CASE("seeded evaluation agrees with full evaluation on random instances") {
  std::mt19937 rng(917);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 4 + static_cast<int>(rng() % 7);  // facts
    std::string dkb, meta;
    for (int i = 1; i <= n; ++i) {
      bool conflicting = rng() % 2 == 0;
      dkb += std::to_string(i) + " | " + (conflicting ? "K" : "F") + "(" + std::to_string(i % 3) + ", " +
             std::to_string(i) + ")\n";
      for (int l = 1; l <= 2; ++l) {
        if (rng() % 3 == 0) continue;
        meta += "R" + std::to_string(l) + "(#" + std::to_string(i) + ", " + std::to_string(rng() % 5) + ")\n";
      }
    }
    Loaded l = load(dkb, meta, "K(x, y1), K(x, y2), y1 != y2 -> bot\n",
                    "[level 1]\npref(x1, x2) <- R1(x1, y1), R1(x2, y2), y1 < y2\n"
                    "pref(x1, x2) <- x1 = id[K(y, z)], x2 = id[F(y, z1)]\n"
                    "[level 2]\npref(x1, x2) <- R2(x1, y1), R2(x2, y2), y1 < y2\n");
    TaxonomyClosure tc(l.tax, l.data);
    auto cs = conflicts(l.data, l.dcs);
    auto full = restrict_to_conflicts(evaluate_rules(l.rules, l.data, l.meta, tc), cs);
    auto seeded = evaluate_rules_on_pairs(l.rules, l.data, l.meta, tc, conflicting_pairs(cs));
    REQUIRE_MESSAGE(seeded == full, "iteration ", iter);
  }
}
