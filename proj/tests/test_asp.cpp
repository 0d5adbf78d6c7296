#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "asp_grammar.hpp"
#include "core/asp.hpp"
#include "core/parse.hpp"
#include "util.hpp"

using namespace priorepair;

namespace {

void check_grammar(const std::string& program, const char* what) {
  aspcheck::CheckResult r = aspcheck::check_program(program);
  CHECK_MESSAGE(r.ok, what, ": ", r.error);
}

AspInput emit_example(const char* query_name) {
  Dataset data = parse_dataset(testutil::fixture("ex.dkb"));
  MetaDatabase meta = parse_meta(testutil::fixture("ex.meta"), data);
  auto dcs = parse_constraints(testutil::fixture("ex.dc"));
  auto queries = parse_queries(testutil::fixture("ex.ucq"));
  auto rules = parse_rules(testutil::fixture("ex.prefs"));
  Taxonomy tax = parse_taxonomy(testutil::fixture("ex.tax"));
  for (const QueryRewriting& q : queries) {
    if (q.name == query_name) return emit_input(data, meta, dcs, q, rules, tax);
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("grammar checker rejects malformed programs") {
  CHECK(aspcheck::check_program("a(1).\nb :- a(1), not c.\n").ok);
  CHECK(aspcheck::check_program("1 {in(A) : data(A)} :- r(A).\n").ok);
  CHECK_FALSE(aspcheck::check_program("a(1)\n").ok);          // missing dot
  CHECK_FALSE(aspcheck::check_program("a(1) :- .\n").ok);     // empty body
  CHECK_FALSE(aspcheck::check_program(":- b(X,.\n").ok);      // broken args
  CHECK_FALSE(aspcheck::check_program("a :- b((X).\n").ok);   // unbalanced
}

TEST_CASE("fixed programs match their frozen text") {
  CHECK(emit_priority(Strategy::Up) == testutil::golden("priority_u.lp"));
  CHECK(emit_priority(Strategy::Down) == testutil::golden("priority_d.lp"));
  CHECK(emit_priority(Strategy::RefinedUp) == testutil::golden("priority_ru.lp"));
  CHECK(emit_priority(Strategy::Grounded) == testutil::golden("priority_g.lp"));
  CHECK(emit_minconf() == testutil::golden("minconf.lp"));
  CHECK(emit_semantics(RepairKind::Pareto, Semantics::AR) == testutil::golden("semantics_p_ar.lp"));
}

TEST_CASE("semantics programs share the common blocks") {
  std::string subset_ar = emit_semantics(RepairKind::Subset, Semantics::AR);
  std::string pareto_ar = emit_semantics(RepairKind::Pareto, Semantics::AR);
  std::string completion_ar = emit_semantics(RepairKind::Completion, Semantics::AR);
  REQUIRE(pareto_ar.size() > subset_ar.size());
  CHECK(pareto_ar.compare(0, subset_ar.size(), subset_ar) == 0);
  CHECK(completion_ar.compare(0, subset_ar.size(), subset_ar) == 0);

  // The family block is mode-independent: brave programs append the same one.
  std::string subset_brave = emit_semantics(RepairKind::Subset, Semantics::Brave);
  std::string pareto_block = pareto_ar.substr(subset_ar.size());
  CHECK(emit_semantics(RepairKind::Pareto, Semantics::Brave) == subset_brave + pareto_block);
  std::string completion_block = completion_ar.substr(subset_ar.size());
  CHECK(emit_semantics(RepairKind::Completion, Semantics::Brave) == subset_brave + completion_block);

  CHECK(subset_brave.find("sat") != std::string::npos);
  CHECK(subset_ar.find("sat") == std::string::npos);
  CHECK(pareto_block.find("valid(") != std::string::npos);
  CHECK(completion_block.find("pref_comp(") != std::string::npos);
  CHECK(subset_ar.find("valid(") == std::string::npos);
  CHECK(subset_ar.find("pref_comp(") == std::string::npos);

  for (RepairKind kind : {RepairKind::Subset, RepairKind::Pareto, RepairKind::Completion}) {
    for (Semantics sem : {Semantics::Brave, Semantics::AR, Semantics::IAR}) {
      std::string p = emit_semantics(kind, sem);
      check_grammar(p, "semantics program");
      bool iar = sem == Semantics::IAR;
      CHECK(p.find("reachable(") != std::string::npos);
      // IAR threads the cause identifier through localization.
      CHECK((p.find("reachable(A, C)") != std::string::npos) == iar);
    }
  }
  for (Strategy s : {Strategy::Up, Strategy::Down, Strategy::RefinedUp, Strategy::Grounded}) {
    check_grammar(emit_priority(s), "priority program");
  }
  check_grammar(emit_minconf(), "minconf program");
}

TEST_CASE("example knowledge base renders exactly") {
  AspInput in = emit_example("qfac");

  CHECK(in.data ==
        "data(1). apr(1,a).\n"
        "data(2). fpr(2,a).\n"
        "data(3). cleric(3,a).\n"
        "data(4). adm(4,a).\n"
        "data(5). teach(5,a,c).\n"
        "data(6). adm(6,b).\n"
        "data(7). apr(7,b).\n"
        "% pred apr = APr\n"
        "% pred fpr = FPr\n"
        "% pred cleric = Cleric\n"
        "% pred adm = Adm\n"
        "% pred teach = Teach\n"
        "% pred date = Date\n"
        "% pred fac = Fac\n");

  CHECK(in.meta ==
        "date(1,2014).\n"
        "date(2,2025).\n"
        "date(3,2013).\n");

  // First constraint: one conf_init rule plus one inConf_init per member,
  // all sharing the body.
  const std::string head =
      "conf_init((Id0, Id1)) :- apr(Id0, X), fpr(Id1, X).\n"
      "inConf_init((Id0, Id1), Id0) :- apr(Id0, X), fpr(Id1, X).\n"
      "inConf_init((Id0, Id1), Id1) :- apr(Id0, X), fpr(Id1, X).\n";
  CHECK(in.constraints.compare(0, head.size(), head) == 0);
  CHECK(in.constraints.find("conf_init((Id0, Id1)) :- adm(Id0, X), teach(Id1, X, Y).\n") != std::string::npos);
  CHECK(std::count(in.constraints.begin(), in.constraints.end(), '\n') == 21);

  CHECK(in.causes ==
        "cause((X), (Id0)) :- fac(Id0, X).\n"
        "inCause((Id0), Id0) :- fac(Id0, X).\n"
        "cause((X), (Id0)) :- apr(Id0, X).\n"
        "inCause((Id0), Id0) :- apr(Id0, X).\n"
        "cause((X), (Id0)) :- fpr(Id0, X).\n"
        "inCause((Id0), Id0) :- fpr(Id0, X).\n"
        "cause((X), (Id0)) :- teach(Id0, X, Y).\n"
        "inCause((Id0), Id0) :- teach(Id0, X, Y).\n");

  // Rule three expands over the taxonomy: both admin roles crossed with the
  // three faculty roles, data atoms before bindings.
  CHECK(in.prefs ==
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), date(X1, Y1), date(X2, Y2), Y2 < Y1.\n"
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), fpr(X1, Y), apr(X2, Y).\n"
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), not teach(Y0, Y, _), adm(X1, Y), apr(X2, Y).\n"
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), not teach(Y0, Y, _), adm(X1, Y), fpr(X2, Y).\n"
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), not teach(Y0, Y, _), adm(X1, Y), fac(X2, Y).\n"
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), not teach(Y0, Y, _), cleric(X1, Y), apr(X2, Y).\n"
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), not teach(Y0, Y, _), cleric(X1, Y), fpr(X2, Y).\n"
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), not teach(Y0, Y, _), cleric(X1, Y), fac(X2, Y).\n"
        "level(1).\n");

  // The negated teaching atom leaves its fact identifier unconstrained; that
  // is reported once for the rule, not per expansion.
  REQUIRE(in.warnings.size() == 1);
  CHECK(in.warnings[0].find("rule at line 8") != std::string::npos);
  CHECK(in.warnings[0].find("Y0") != std::string::npos);

  for (const std::string& s : {in.data, in.meta, in.constraints, in.causes, in.prefs}) {
    check_grammar(s, "input section");
  }
}

TEST_CASE("multi-level rules and inequality constraints render") {
  Dataset data = parse_dataset(testutil::fixture("ex-ru-g-2.dkb"));
  MetaDatabase meta = parse_meta(testutil::fixture("ex-ru-g-2.meta"), data);
  auto dcs = parse_constraints(testutil::fixture("ex-ru-g-2.dc"));
  auto rules = parse_rules(testutil::fixture("ex-ru-g-2.prefs"));
  auto queries = parse_queries("q(x) <- P(x)\n");
  AspInput in = emit_input(data, meta, dcs, queries.at(0), rules, Taxonomy{});

  CHECK(in.data ==
        "data(a). p(a,1).\n"
        "data(b). p(b,2).\n"
        "data(g). p(g,3).\n"
        "data(d). p(d,4).\n"
        "% pred p = P\n"
        "% pred e1 = E1\n"
        "% pred e2 = E2\n"
        "% pred e3 = E3\n");
  CHECK(in.meta ==
        "e1(a,b).\n"
        "e1(g,d).\n"
        "e2(b,g).\n"
        "e2(d,a).\n"
        "e3(g,b).\n");
  CHECK(in.constraints ==
        "conf_init((Id0, Id1)) :- p(Id0, X), p(Id1, Y), X != Y.\n"
        "inConf_init((Id0, Id1), Id0) :- p(Id0, X), p(Id1, Y), X != Y.\n"
        "inConf_init((Id0, Id1), Id1) :- p(Id0, X), p(Id1, Y), X != Y.\n");
  CHECK(in.prefs ==
        "pref_init(X1, X2, 1) :- inConf(C, X1), inConf(C, X2), e1(X1, X2).\n"
        "pref_init(X1, X2, 2) :- inConf(C, X1), inConf(C, X2), e2(X1, X2).\n"
        "pref_init(X1, X2, 3) :- inConf(C, X1), inConf(C, X2), e3(X1, X2).\n"
        "level(1).\n"
        "level(2).\n"
        "level(3).\n");
  CHECK(in.warnings.empty());
  for (const std::string& s : {in.data, in.meta, in.constraints, in.causes, in.prefs}) {
    check_grammar(s, "input section");
  }
}

TEST_CASE("name sanitization") {
  // Reserved target names take the namespace prefix; case-folding collisions
  // take numeric suffixes, assigned in first-use order.
  Dataset data = parse_dataset(
      "1 | Pref(B)\n"
      "2 | AB(u1)\n"
      "3 | Ab(u1)\n");
  auto queries = parse_queries("q(x) <- Pref(x)\n");
  AspInput in = emit_input(data, MetaDatabase{}, {}, queries.at(0), {}, Taxonomy{});
  CHECK(in.data ==
        "data(1). p_pref(1,b).\n"
        "data(2). ab(2,u1).\n"
        "data(3). ab_2(3,u1).\n"
        "% pred p_pref = Pref\n"
        "% pred ab = AB\n"
        "% pred ab_2 = Ab\n"
        "% const b = B\n");
  check_grammar(in.data, "sanitized data");

  // Constants outside the letters/digits/underscore alphabet cannot be
  // rendered reversibly.
  Dataset bad;
  bad.add("1", Fact{"P", {Constant::symbol("a!b")}});
  CHECK_THROWS_WITH_AS(emit_input(bad, MetaDatabase{}, {}, queries.at(0), {}, Taxonomy{}),
                       "unsanitizable constant 'a!b'", EmitError);
}
