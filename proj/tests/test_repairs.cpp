#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core/conflicts.hpp"
#include "core/oracle.hpp"
#include "core/parse.hpp"
#include "util.hpp"

using namespace priorepair;

namespace {

std::set<std::set<std::string>> mask_ids(const Dataset& data, const std::vector<FactMask>& masks) {
  std::set<std::set<std::string>> out;
  for (FactMask m : masks) {
    std::set<std::string> ids;
    for (FactIndex i = 0; i < data.size(); ++i) {
      if (m >> i & 1) ids.insert(data.id(i));
    }
    out.insert(std::move(ids));
  }
  return out;
}

bool mask_consistent(FactMask m, const std::vector<Conflict>& cs) {
  for (const Conflict& c : cs) {
    bool all = true;
    for (FactIndex f : c) all = all && (m >> f & 1);
    if (all) return false;
  }
  return true;
}

PriorityRelation prio_of(std::vector<std::pair<FactIndex, FactIndex>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return {std::move(pairs)};
}

struct Example {
  Dataset data;
  std::vector<Conflict> cs;
};

Example load_example() {
  Example e;
  e.data = parse_dataset(testutil::fixture("ex.dkb"));
  e.cs = conflicts(e.data, parse_constraints(testutil::fixture("ex.dc")));
  return e;
}

}  // namespace

TEST_CASE("running example has exactly six repairs") {
  Example e = load_example();
  auto repairs = enumerate_repairs(e.data.size(), e.cs);
  CHECK(mask_ids(e.data, repairs) == std::set<std::set<std::string>>{
                                         {"1", "5", "6"}, {"2", "5", "6"}, {"3", "4", "6"},
                                         {"1", "5", "7"}, {"2", "5", "7"}, {"3", "4", "7"}});
  CHECK(std::is_sorted(repairs.begin(), repairs.end()));
  for (FactMask m : repairs) CHECK(mask_consistent(m, e.cs));
}

TEST_CASE("a hand-picked priority narrows the repair families") {
  Example e = load_example();
  // ids: 5 > 4, 1 > 3, 6 > 7 as indices (4,3), (0,2), (5,6).
  PriorityRelation prio = prio_of({{4, 3}, {0, 2}, {5, 6}});
  auto repairs = enumerate_repairs(e.data.size(), e.cs);

  auto pareto = pareto_optimal(e.data.size(), e.cs, repairs, prio);
  CHECK(mask_ids(e.data, pareto) == std::set<std::set<std::string>>{
                                        {"1", "5", "6"}, {"2", "5", "6"}, {"3", "4", "6"}});

  auto completion = completion_optimal(e.data.size(), e.cs, repairs, prio);
  CHECK(mask_ids(e.data, completion) == std::set<std::set<std::string>>{
                                            {"1", "5", "6"}, {"2", "5", "6"}});

  // repair_family dispatches to the same computations.
  CHECK(repair_family(RepairKind::Subset, e.data.size(), e.cs, prio) == repairs);
  CHECK(repair_family(RepairKind::Pareto, e.data.size(), e.cs, prio) == pareto);
  CHECK(repair_family(RepairKind::Completion, e.data.size(), e.cs, prio) == completion);
}

TEST_CASE("an empty priority collapses the families") {
  Example e = load_example();
  PriorityRelation empty;
  auto repairs = enumerate_repairs(e.data.size(), e.cs);
  CHECK(repair_family(RepairKind::Subset, e.data.size(), e.cs, empty) == repairs);
  CHECK(repair_family(RepairKind::Pareto, e.data.size(), e.cs, empty) == repairs);
  CHECK(repair_family(RepairKind::Completion, e.data.size(), e.cs, empty) == repairs);
}

TEST_CASE("self-inconsistent facts appear in no repair") {
  Dataset data = parse_dataset("1 | S(a)\n2 | P(a)\n3 | Q(a)\n");
  auto cs = conflicts(data, parse_constraints("S(x) -> bot\nP(x), Q(x) -> bot\n"));
  auto repairs = enumerate_repairs(data.size(), cs);
  CHECK(mask_ids(data, repairs) == std::set<std::set<std::string>>{{"2"}, {"3"}});
}

TEST_CASE("consistent data has one repair: everything") {
  Dataset data = parse_dataset("1 | P(a)\n2 | Q(b)\n");
  auto repairs = enumerate_repairs(data.size(), {});
  REQUIRE(repairs.size() == 1);
  CHECK(repairs[0] == 0b11);
}

TEST_CASE("priority can single out one repair") {
  // Two facts, one conflict; preferring 0 leaves {0} as the only improved
  // repair under both narrowed families.
  std::vector<Conflict> cs = {{0, 1}};
  PriorityRelation prio = prio_of({{0, 1}});
  auto repairs = enumerate_repairs(2, cs);
  REQUIRE(repairs.size() == 2);
  CHECK(pareto_optimal(2, cs, repairs, prio) == std::vector<FactMask>{0b01});
  CHECK(completion_optimal(2, cs, repairs, prio) == std::vector<FactMask>{0b01});
}

TEST_CASE("chain: completion within pareto within subset repairs") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = 3 + rng() % 8;  // 3..10 facts
    std::vector<std::vector<FactIndex>> cands;
    int nconf = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < nconf; ++i) {
      std::set<FactIndex> s;
      std::size_t size = 2 + rng() % 2;
      while (s.size() < size) s.insert(rng() % n);
      cands.emplace_back(s.begin(), s.end());
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    auto cs = minimize_candidates(cands);

    // Random acyclic priority over conflicting pairs: orient along a random
    // permutation.
    std::vector<FactIndex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<std::pair<FactIndex, FactIndex>> pairs;
    for (const auto& [a, b] : conflicting_pairs(cs)) {
      if (rng() % 2) continue;  // leave some pairs unordered
      pairs.emplace_back(pos[a] < pos[b] ? a : b, pos[a] < pos[b] ? b : a);
    }
    PriorityRelation prio = prio_of(std::move(pairs));
    REQUIRE(pairs_acyclic(prio.pairs));

    auto rep = repair_family(RepairKind::Subset, n, cs, prio);
    auto prep = repair_family(RepairKind::Pareto, n, cs, prio);
    auto crep = repair_family(RepairKind::Completion, n, cs, prio);
    REQUIRE_FALSE(rep.empty());
    REQUIRE_FALSE(prep.empty());
    REQUIRE_FALSE(crep.empty());
    CHECK(std::includes(rep.begin(), rep.end(), prep.begin(), prep.end()));
    CHECK(std::includes(prep.begin(), prep.end(), crep.begin(), crep.end()));
    for (FactMask m : rep) CHECK(mask_consistent(m, cs));
  }
}

TEST_CASE("enumeration caps throw") {
  std::vector<Conflict> cs;
  for (FactIndex i = 0; i + 1 < 40; i += 2) cs.push_back({i, i + 1});
  CHECK_THROWS_AS(enumerate_repairs(40, cs), CapExceeded);  // default fact cap 20

  // 17 disjoint binary conflicts with nothing ordered exceed the pair cap
  // (16); the cap fires before the repair list is consulted.
  std::vector<Conflict> seventeen;
  for (FactIndex i = 0; i + 1 < 34; i += 2) seventeen.push_back({i, i + 1});
  REQUIRE(seventeen.size() == 17);
  CHECK_THROWS_AS(completion_optimal(34, seventeen, {}, PriorityRelation{}), CapExceeded);

  // At the cap everything still runs.
  std::vector<Conflict> sixteen(seventeen.begin(), seventeen.end() - 1);
  auto repairs = enumerate_repairs(20, std::vector<Conflict>(seventeen.begin(), seventeen.begin() + 10));
  CHECK(repairs.size() == 1024);  // 2^10 choices, one per conflict
  CHECK(completion_optimal(32, sixteen, {}, PriorityRelation{}).empty());
}
