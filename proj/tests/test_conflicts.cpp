#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "core/conflicts.hpp"
#include "core/parse.hpp"
#include "util.hpp"

using namespace priorepair;

namespace {

std::vector<std::vector<std::string>> by_ids(const Dataset& data, const std::vector<Conflict>& cs) {
  std::vector<std::vector<std::string>> out;
  for (const Conflict& c : cs) {
    std::vector<std::string> ids;
    for (FactIndex f : c) ids.push_back(data.id(f));
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace

TEST_CASE("running example has exactly eight conflicts") {
  Dataset data = parse_dataset(testutil::fixture("ex.dkb"));
  auto dcs = parse_constraints(testutil::fixture("ex.dc"));
  auto cs = conflicts(data, dcs);
  CHECK(by_ids(data, cs) == std::vector<std::vector<std::string>>{
                                {"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"},
                                {"2", "4"}, {"3", "5"}, {"4", "5"}, {"6", "7"}});
  CHECK(self_inconsistent_facts(data, dcs).empty());
}

TEST_CASE("inequalities restrict constraint matches") {
  Dataset data = parse_dataset("a | P(1)\nb | P(2)\nc | P(3)\n");
  auto dcs = parse_constraints("P(x), P(y), x != y -> bot\n");
  auto cs = conflicts(data, dcs);
  CHECK(by_ids(data, cs) == std::vector<std::vector<std::string>>{{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

TEST_CASE("single-atom constraints make facts self-inconsistent") {
  Dataset data = parse_dataset("1 | S(a)\n2 | P(a)\n3 | S(b)\n");
  auto dcs = parse_constraints("S(x) -> bot\n");
  CHECK(self_inconsistent_facts(data, dcs) == std::vector<FactIndex>{0, 2});
  auto cs = conflicts(data, dcs);
  CHECK(by_ids(data, cs) == std::vector<std::vector<std::string>>{{"1"}, {"3"}});
}

TEST_CASE("a repeated atom can collapse to a singleton support") {
  // P(x), P(y) without x != y matches x = y = a with support {1}.
  Dataset data = parse_dataset("1 | P(a)\n2 | P(b)\n");
  auto dcs = parse_constraints("P(x), P(y) -> bot\n");
  CHECK(self_inconsistent_facts(data, dcs) == std::vector<FactIndex>{0, 1});
  auto cs = conflicts(data, dcs);
  CHECK(by_ids(data, cs) == std::vector<std::vector<std::string>>{{"1"}, {"2"}});
}

TEST_CASE("candidates are minimized and deduplicated") {
  Dataset data = parse_dataset("1 | P(a)\n2 | Q(a)\n3 | R(b)\n");
  auto dcs = parse_constraints("P(x), Q(x) -> bot\nP(x), Q(x), R(y) -> bot\nQ(x), P(x) -> bot\n");
  auto cands = candidate_inconsistent_sets(data, dcs);
  // The triple survives as a candidate, the symmetric pair collapses.
  CHECK(cands == std::vector<std::vector<FactIndex>>{{0, 1}, {0, 1, 2}});
  auto cs = conflicts(data, dcs);
  CHECK(cands.size() == 2);
  CHECK(cs == std::vector<Conflict>{{0, 1}});
}

TEST_CASE("minimize_candidates keeps inclusion-minimal sets") {
  std::vector<std::vector<FactIndex>> cands = {{1, 2}, {1, 2, 3}, {2}, {4}, {3, 4, 5}};
  CHECK(minimize_candidates(cands) == std::vector<Conflict>{{2}, {4}});
  CHECK(minimize_candidates({}).empty());
  CHECK(minimize_candidates({{0, 1}, {1, 2}}) == std::vector<Conflict>{{0, 1}, {1, 2}});
}

TEST_CASE("consistent data has no conflicts") {
  Dataset data = parse_dataset(testutil::fixture("ex.dkb"));
  CHECK(conflicts(data, {}).empty());
  auto dcs = parse_constraints("Missing(x), Absent(x) -> bot\n");
  CHECK(conflicts(data, dcs).empty());
}

TEST_CASE("constraints with constants") {
  Dataset data = parse_dataset("1 | Role(u1, admin)\n2 | Role(u1, guest)\n3 | Role(u2, admin)\n");
  auto dcs = parse_constraints("Role(x, admin), Role(x, guest) -> bot\n");
  auto cs = conflicts(data, dcs);
  CHECK(by_ids(data, cs) == std::vector<std::vector<std::string>>{{"1", "2"}});
}
