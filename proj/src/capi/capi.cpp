#include "priorepair.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "core/asp.hpp"
#include "core/bundle.hpp"
#include "core/conflicts.hpp"
#include "core/diag.hpp"
#include "core/gen.hpp"
#include "core/json_out.hpp"
#include "core/oracle.hpp"

using namespace priorepair;

struct prq_kb {
  KbBundle kb;
  std::optional<std::vector<Conflict>> conflicts;

  const std::vector<Conflict>& get_conflicts() {
    if (!conflicts) conflicts = priorepair::conflicts(kb.data, kb.constraints);
    return *conflicts;
  }
};

namespace {

thread_local std::string g_last_error;

prq_status fail(prq_status st, std::string msg) {
  g_last_error = std::move(msg);
  return st;
}

// Exception boundary: the C surface never propagates.
template <typename F>
prq_status guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(PRQ_PARSE_ERROR, e.what());
  } catch (const CapExceeded& e) {
    return fail(PRQ_CAP_EXCEEDED, e.what());
  } catch (const EmitError& e) {
    return fail(PRQ_INVALID_ARG, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PRQ_INVALID_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(PRQ_INTERNAL, e.what());
  } catch (...) {
    return fail(PRQ_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

prq_status deliver(const std::string& s, char** out) {
  *out = dup_string(s);
  return *out ? PRQ_OK : fail(PRQ_INTERNAL, "out of memory");
}

std::string text_or_empty(const char* s) { return s ? std::string(s) : std::string(); }

prq_status need(bool ok, const char* what, const char* got) {
  if (ok) return PRQ_OK;
  return fail(PRQ_INVALID_ARG, std::string("invalid ") + what + " '" + (got ? got : "(null)") + "'");
}

}  // namespace

extern "C" {

const char* prq_version(void) { return "0.1.0"; }

const char* prq_last_error(void) { return g_last_error.c_str(); }

void prq_string_free(char* s) { std::free(s); }

prq_status prq_kb_load(const char* dkb, const char* meta, const char* dc, const char* ucq, const char* prefs,
                       const char* tax, prq_kb** out_kb) {
  if (!out_kb) return fail(PRQ_INVALID_ARG, "out_kb is null");
  *out_kb = nullptr;
  return guarded([&] {
    auto kb = std::make_unique<prq_kb>();
    kb->kb = load_bundle(text_or_empty(dkb), text_or_empty(meta), text_or_empty(dc), text_or_empty(ucq),
                         text_or_empty(prefs), text_or_empty(tax));
    *out_kb = kb.release();
    return PRQ_OK;
  });
}

void prq_kb_free(prq_kb* kb) { delete kb; }

prq_status prq_conflicts_json(prq_kb* kb, int pretty, char** out) {
  if (!kb || !out) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] { return deliver(render_lines(conflicts_json(kb->kb.data, kb->get_conflicts()), pretty != 0), out); });
}

prq_status prq_priority_json(prq_kb* kb, const char* strategy, int pretty, char** out) {
  if (!kb || !out) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] {
    auto s = strategy_from(text_or_empty(strategy));
    if (prq_status st = need(s.has_value(), "strategy", strategy); st != PRQ_OK) return st;
    PriorityRelation prio = compute_priority(kb->kb, kb->get_conflicts(), *s);
    return deliver(render_lines(priority_json(kb->kb.data, prio), pretty != 0), out);
  });
}

prq_status prq_answers_json(prq_kb* kb, const char* strategy, const char* repair, const char* semantics, int jobs,
                            int exact_causes, int pretty, char** out) {
  if (!kb || !out) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] {
    auto s = strategy_from(text_or_empty(strategy));
    if (prq_status st = need(s.has_value(), "strategy", strategy); st != PRQ_OK) return st;
    auto kind = repair_kind_from(text_or_empty(repair));
    if (prq_status st = need(kind.has_value(), "repair", repair); st != PRQ_OK) return st;
    auto sem = semantics_from(text_or_empty(semantics));
    if (prq_status st = need(sem.has_value(), "semantics", semantics); st != PRQ_OK) return st;
    if (jobs < 1) return fail(PRQ_INVALID_ARG, "jobs must be at least 1");
    const std::vector<Conflict>& conf = kb->get_conflicts();
    PriorityRelation prio = compute_priority(kb->kb, conf, *s);
    nlohmann::json all = nlohmann::json::array();
    for (const QueryRewriting& q : kb->kb.queries) {
      for (auto& el : answers_json(q.name, answer_query(kb->kb.data, q, conf, prio, *kind, *sem, jobs,
                                                        exact_causes != 0))) {
        all.push_back(std::move(el));
      }
    }
    return deliver(render_lines(all, pretty != 0), out);
  });
}

prq_status prq_repairs_json(prq_kb* kb, const char* strategy, const char* repair, int pretty, char** out) {
  if (!kb || !out) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] {
    auto s = strategy_from(text_or_empty(strategy));
    if (prq_status st = need(s.has_value(), "strategy", strategy); st != PRQ_OK) return st;
    auto kind = repair_kind_from(text_or_empty(repair));
    if (prq_status st = need(kind.has_value(), "repair", repair); st != PRQ_OK) return st;
    const std::vector<Conflict>& conf = kb->get_conflicts();
    PriorityRelation prio = compute_priority(kb->kb, conf, *s);
    std::vector<FactMask> family = repair_family(*kind, kb->kb.data.size(), conf, prio);
    std::vector<std::vector<FactIndex>> repairs;
    repairs.reserve(family.size());
    for (FactMask m : family) {
      std::vector<FactIndex> r;
      for (FactIndex i = 0; i < kb->kb.data.size(); ++i) {
        if (m >> i & 1) r.push_back(i);
      }
      repairs.push_back(std::move(r));
    }
    return deliver(render_lines(repairs_json(kb->kb.data, repairs), pretty != 0), out);
  });
}

prq_status prq_emit_input(prq_kb* kb, const char* query, char** out_data, char** out_meta, char** out_constraints,
                          char** out_causes, char** out_prefs, char** out_warnings) {
  if (!kb || !out_data || !out_meta || !out_constraints || !out_causes || !out_prefs || !out_warnings) {
    return fail(PRQ_INVALID_ARG, "null argument");
  }
  return guarded([&] {
    QueryRewriting selected;  // empty when the bundle has no queries
    if (!kb->kb.queries.empty()) {
      if (query) {
        const QueryRewriting* found = nullptr;
        for (const QueryRewriting& q : kb->kb.queries) {
          if (q.name == query) found = &q;
        }
        if (!found) return fail(PRQ_INVALID_ARG, std::string("unknown query '") + query + "'");
        selected = *found;
      } else {
        selected = kb->kb.queries.front();
      }
    }
    AspInput in = emit_input(kb->kb.data, kb->kb.meta, kb->kb.constraints, selected, kb->kb.rules, kb->kb.tax);
    std::string warnings;
    for (const std::string& w : in.warnings) {
      warnings += w;
      warnings += "\n";
    }
    char** outs[] = {out_data, out_meta, out_constraints, out_causes, out_prefs, out_warnings};
    const std::string* texts[] = {&in.data, &in.meta, &in.constraints, &in.causes, &in.prefs, &warnings};
    for (int i = 0; i < 6; ++i) *outs[i] = nullptr;
    for (int i = 0; i < 6; ++i) {
      if (prq_status st = deliver(*texts[i], outs[i]); st != PRQ_OK) {
        for (int j = 0; j < i; ++j) {
          std::free(*outs[j]);
          *outs[j] = nullptr;
        }
        return st;
      }
    }
    return PRQ_OK;
  });
}

prq_status prq_emit_priority(const char* strategy, char** out) {
  if (!out) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] {
    auto s = strategy_from(text_or_empty(strategy));
    if (prq_status st = need(s.has_value(), "strategy", strategy); st != PRQ_OK) return st;
    return deliver(emit_priority(*s), out);
  });
}

prq_status prq_emit_minconf(char** out) {
  if (!out) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] { return deliver(emit_minconf(), out); });
}

prq_status prq_emit_semantics(const char* repair, const char* semantics, char** out) {
  if (!out) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] {
    auto kind = repair_kind_from(text_or_empty(repair));
    if (prq_status st = need(kind.has_value(), "repair", repair); st != PRQ_OK) return st;
    auto sem = semantics_from(text_or_empty(semantics));
    if (prq_status st = need(sem.has_value(), "semantics", semantics); st != PRQ_OK) return st;
    return deliver(emit_semantics(*kind, *sem), out);
  });
}

prq_status prq_generate(unsigned long long facts, double conflict_rate, int max_conflict_arity, int levels,
                        double pref_density, unsigned long long seed, char** out_dkb, char** out_dc, char** out_meta,
                        char** out_prefs) {
  if (!out_dkb || !out_dc || !out_meta || !out_prefs) return fail(PRQ_INVALID_ARG, "null argument");
  return guarded([&] {
    GenParams p;
    p.facts = facts;
    p.conflict_rate = conflict_rate;
    p.max_conflict_arity = max_conflict_arity;
    p.levels = levels;
    p.pref_density = pref_density;
    p.seed = seed;
    GenOutput g = generate(p);
    char** outs[] = {out_dkb, out_dc, out_meta, out_prefs};
    const std::string* texts[] = {&g.dkb, &g.dc, &g.meta, &g.prefs};
    for (int i = 0; i < 4; ++i) *outs[i] = nullptr;
    for (int i = 0; i < 4; ++i) {
      if (prq_status st = deliver(*texts[i], outs[i]); st != PRQ_OK) {
        for (int j = 0; j < i; ++j) {
          std::free(*outs[j]);
          *outs[j] = nullptr;
        }
        return st;
      }
    }
    return PRQ_OK;
  });
}

}  // extern "C"
