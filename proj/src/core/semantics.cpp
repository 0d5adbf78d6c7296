#include "core/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <thread>
#include <utility>

#include "core/causes.hpp"
#include "core/solver.hpp"

namespace priorepair {

const char* repair_kind_name(RepairKind k) {
  switch (k) {
    case RepairKind::Subset: return "subset";
    case RepairKind::Pareto: return "pareto";
    case RepairKind::Completion: return "completion";
  }
  return "?";
}

const char* semantics_name(Semantics s) {
  switch (s) {
    case Semantics::Brave: return "brave";
    case Semantics::AR: return "ar";
    case Semantics::IAR: return "iar";
  }
  return "?";
}

AttackRelation attack_relation(const std::vector<Conflict>& conflicts,
                               const PriorityRelation& prio) {
  AttackRelation rel;
  rel.att.reserve(conflicts.size());
  for (const auto& c : conflicts) {
    std::vector<char> row(c.size(), 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      for (FactIndex b : c) {
        if (b != c[j] && prio.contains(c[j], b)) {
          row[j] = 0;
          break;
        }
      }
    }
    rel.att.push_back(std::move(row));
  }
  return rel;
}

std::vector<FactIndex> localize(const std::vector<std::vector<FactIndex>>& causes,
                                const std::vector<Conflict>& conflicts,
                                const AttackRelation& att) {
  FactIndex bound = 0;
  for (const auto& c : causes)
    for (FactIndex f : c) bound = std::max(bound, f + 1);
  for (const auto& c : conflicts)
    for (FactIndex f : c) bound = std::max(bound, f + 1);

  std::vector<char> reach(bound, 0);
  std::vector<FactIndex> todo;
  auto push = [&](FactIndex f) {
    if (!reach[f]) {
      reach[f] = 1;
      todo.push_back(f);
    }
  };
  for (const auto& c : causes)
    for (FactIndex f : c) push(f);

  // fact -> conflicts in which it is an attacked member
  std::vector<std::vector<std::size_t>> attacked_in(bound);
  for (std::size_t ci = 0; ci < conflicts.size(); ++ci)
    for (std::size_t j = 0; j < conflicts[ci].size(); ++j)
      if (att.att[ci][j]) attacked_in[conflicts[ci][j]].push_back(ci);

  for (std::size_t k = 0; k < todo.size(); ++k) {
    for (std::size_t ci : attacked_in[todo[k]])
      for (FactIndex a : conflicts[ci]) push(a);
  }
  std::vector<FactIndex> out;
  for (FactIndex f = 0; f < bound; ++f)
    if (reach[f]) out.push_back(f);
  return out;
}

namespace {

constexpr int kConstTrue = std::numeric_limits<int>::max();
constexpr int kConstFalse = std::numeric_limits<int>::min();

// Maintains the orientation digraph over localized facts: priority edges are
// fixed, each bound variable contributes one edge whose direction follows its
// value. An assignment that closes a directed cycle is rejected.
class OrientationTheory : public TheoryListener {
 public:
  explicit OrientationTheory(std::size_t nodes) : out_(nodes) {}

  void add_fixed_edge(std::size_t a, std::size_t b) { out_[a].push_back(b); }

  // value true orients a -> b, false orients b -> a
  void bind(int var, std::size_t a, std::size_t b) {
    if (edges_.size() <= static_cast<std::size_t>(var))
      edges_.resize(static_cast<std::size_t>(var) + 1, kUnbound);
    edges_[static_cast<std::size_t>(var)] = {a, b};
  }

  bool on_assign(int var, bool value) override {
    if (static_cast<std::size_t>(var) >= edges_.size()) return true;
    auto [a, b] = edges_[static_cast<std::size_t>(var)];
    if (a == kNone) return true;
    if (!value) std::swap(a, b);
    out_[a].push_back(b);
    active_.push_back({var, a});
    return !reaches(b, a);
  }

  void on_unassign(int var) override {
    if (static_cast<std::size_t>(var) >= edges_.size()) return;
    if (edges_[static_cast<std::size_t>(var)].first == kNone) return;
    assert(!active_.empty() && active_.back().var == var);
    out_[active_.back().from].pop_back();
    active_.pop_back();
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::pair<std::size_t, std::size_t> kUnbound{kNone, kNone};

  bool reaches(std::size_t src, std::size_t dst) {
    if (src == dst) return true;
    seen_.assign(out_.size(), 0);
    stack_.clear();
    stack_.push_back(src);
    seen_[src] = 1;
    while (!stack_.empty()) {
      std::size_t v = stack_.back();
      stack_.pop_back();
      for (std::size_t w : out_[v]) {
        if (w == dst) return true;
        if (!seen_[w]) {
          seen_[w] = 1;
          stack_.push_back(w);
        }
      }
    }
    return false;
  }

  struct Active {
    int var;
    std::size_t from;
  };
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<Active> active_;
  std::vector<char> seen_;
  std::vector<std::size_t> stack_;
};

enum class Goal : std::uint8_t {
  SomeCauseIn,   // satisfiable iff some repair contains a full cause
  EveryCauseOut  // satisfiable iff some repair misses part of every cause
};

bool solve_problem(RepairKind kind, Goal goal,
                   const std::vector<std::vector<FactIndex>>& causes,
                   const std::vector<Conflict>& conflicts,
                   const AttackRelation& att, const PriorityRelation& prio) {
  std::vector<FactIndex> reach = localize(causes, conflicts, att);
  FactIndex bound = reach.empty() ? 0 : reach.back() + 1;
  std::vector<int> local(bound, -1);
  for (std::size_t i = 0; i < reach.size(); ++i)
    local[reach[i]] = static_cast<int>(i);
  auto is_reach = [&](FactIndex f) { return f < bound && local[f] >= 0; };

  SatSolver sat;
  std::vector<int> sel(reach.size());
  for (auto& v : sel) v = sat.add_var();

  std::vector<std::size_t> full;  // conflicts entirely inside the localized set
  for (std::size_t ci = 0; ci < conflicts.size(); ++ci) {
    bool all = true;
    for (FactIndex f : conflicts[ci]) {
      if (!is_reach(f)) {
        all = false;
        break;
      }
    }
    if (all) full.push_back(ci);
  }

  // per localized fact: positions in fully localized conflicts
  struct Occ {
    std::size_t ci;
    std::size_t j;
  };
  std::vector<std::vector<Occ>> occ(reach.size());
  std::vector<int> degree(reach.size(), 0);
  for (std::size_t ci : full) {
    for (std::size_t j = 0; j < conflicts[ci].size(); ++j) {
      int li = local[conflicts[ci][j]];
      occ[static_cast<std::size_t>(li)].push_back({ci, j});
      ++degree[static_cast<std::size_t>(li)];
    }
  }

  // a repair never contains a whole conflict
  for (std::size_t ci : full) {
    std::vector<int> cl;
    for (FactIndex f : conflicts[ci]) cl.push_back(-sel[static_cast<std::size_t>(local[f])]);
    sat.add_clause(std::move(cl));
  }

  // Completion mode: one variable per unordered conflicting pair, plus an
  // acyclicity theory over chosen orientations and fixed priority edges.
  std::unique_ptr<OrientationTheory> theory;
  std::vector<int> orient_vars;
  std::map<std::pair<int, int>, int> orient;
  if (kind == RepairKind::Completion) {
    theory = std::make_unique<OrientationTheory>(reach.size());
    for (const auto& pr : prio.pairs)
      if (is_reach(pr.first) && is_reach(pr.second))
        theory->add_fixed_edge(static_cast<std::size_t>(local[pr.first]),
                               static_cast<std::size_t>(local[pr.second]));
    for (const auto& c : conflicts) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          FactIndex a = c[i], b = c[j];
          if (!is_reach(a) || !is_reach(b)) continue;
          if (prio.contains(a, b) || prio.contains(b, a)) continue;
          std::pair<int, int> key = std::minmax(local[a], local[b]);
          if (orient.find(key) == orient.end()) {
            int v = sat.add_var();
            orient.emplace(key, v);
            orient_vars.push_back(v);
            theory->bind(v, static_cast<std::size_t>(key.first),
                         static_cast<std::size_t>(key.second));
          }
        }
      }
    }
  }

  // literal for "a preferred to b" under the chosen completion
  auto pref_lit = [&](FactIndex a, FactIndex b) -> int {
    if (prio.contains(a, b)) return kConstTrue;
    if (prio.contains(b, a)) return kConstFalse;
    std::pair<int, int> key = std::minmax(local[a], local[b]);
    auto it = orient.find(key);
    assert(it != orient.end());
    return local[a] == key.first ? it->second : -it->second;
  };

  // A localized fact is either kept or its removal is excused by a conflict
  // attacking it whose other members are all kept (and, under completions,
  // none of which the fact is preferred to).
  for (std::size_t li = 0; li < reach.size(); ++li) {
    FactIndex a = reach[li];
    std::vector<int> clause{sel[li]};
    bool auto_valid = false;
    for (const Occ& oc : occ[li]) {
      if (!att.att[oc.ci][oc.j]) continue;
      const Conflict& x = conflicts[oc.ci];
      std::vector<int> conj;
      bool dead = false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == oc.j) continue;
        conj.push_back(sel[static_cast<std::size_t>(local[x[k]])]);
        if (kind == RepairKind::Completion) {
          int pl = pref_lit(a, x[k]);
          if (pl == kConstTrue) {
            dead = true;
            break;
          }
          if (pl != kConstFalse) conj.push_back(-pl);
        }
      }
      if (dead) continue;
      if (conj.empty()) {
        auto_valid = true;
        break;
      }
      int aux = sat.add_var();
      for (int lit : conj) sat.add_clause({-aux, lit});
      clause.push_back(aux);
    }
    if (!auto_valid) sat.add_clause(std::move(clause));
  }

  if (goal == Goal::SomeCauseIn) {
    std::vector<int> any;
    for (const auto& c : causes) {
      int aux = sat.add_var();
      for (FactIndex f : c) sat.add_clause({-aux, sel[static_cast<std::size_t>(local[f])]});
      any.push_back(aux);
    }
    sat.add_clause(std::move(any));
  } else {
    for (const auto& c : causes) {
      std::vector<int> ways;
      bool free = false;  // some member is attacked with no co-members at all
      for (FactIndex a : c) {
        std::size_t la = static_cast<std::size_t>(local[a]);
        for (const Occ& oc : occ[la]) {
          if (!att.att[oc.ci][oc.j]) continue;
          const Conflict& x = conflicts[oc.ci];
          std::vector<int> conj;
          for (std::size_t k = 0; k < x.size(); ++k)
            if (k != oc.j) conj.push_back(sel[static_cast<std::size_t>(local[x[k]])]);
          if (conj.empty()) {
            free = true;
            break;
          }
          int aux = sat.add_var();
          for (int lit : conj) sat.add_clause({-aux, lit});
          ways.push_back(aux);
        }
        if (free) break;
      }
      if (!free) sat.add_clause(std::move(ways));
    }
  }

  // Decide dataset membership first, densest facts leading; orientations
  // follow, auxiliaries fall out of propagation.
  std::vector<std::size_t> by_degree(reach.size());
  for (std::size_t i = 0; i < reach.size(); ++i) by_degree[i] = i;
  std::sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) {
    return degree[a] != degree[b] ? degree[a] > degree[b] : reach[a] < reach[b];
  });
  std::vector<int> order;
  for (std::size_t li : by_degree) order.push_back(sel[li]);
  for (int v : orient_vars) order.push_back(v);
  sat.set_decision_order(std::move(order));

  return sat.solve(theory.get());
}

}  // namespace

bool decide(RepairKind kind, Semantics sem,
            const std::vector<std::vector<FactIndex>>& causes,
            const std::vector<Conflict>& conflicts,
            const PriorityRelation& prio) {
  if (causes.empty()) return false;
  static const PriorityRelation no_prio{};
  const PriorityRelation& eff = kind == RepairKind::Subset ? no_prio : prio;
  AttackRelation att = attack_relation(conflicts, eff);
  switch (sem) {
    case Semantics::Brave:
      return solve_problem(kind, Goal::SomeCauseIn, causes, conflicts, att, eff);
    case Semantics::AR:
      return !solve_problem(kind, Goal::EveryCauseOut, causes, conflicts, att, eff);
    case Semantics::IAR:
      for (const auto& c : causes) {
        std::vector<std::vector<FactIndex>> one{c};
        if (!solve_problem(kind, Goal::EveryCauseOut, one, conflicts, att, eff))
          return true;
      }
      return false;
  }
  return false;
}

std::vector<QueryAnswer> answer_query(const Dataset& data,
                                      const QueryRewriting& query,
                                      const std::vector<Conflict>& conflicts,
                                      const PriorityRelation& prio,
                                      RepairKind kind, Semantics sem,
                                      int jobs, bool exact) {
  std::vector<FactIndex> selfinc;
  for (const auto& c : conflicts)
    if (c.size() == 1) selfinc.push_back(c[0]);
  std::sort(selfinc.begin(), selfinc.end());

  std::vector<AnswerCauses> per_tuple =
      exact ? exact_causes(data, query, selfinc, conflicts)
            : candidate_causes(data, query, selfinc);

  std::vector<QueryAnswer> out(per_tuple.size());
  auto work = [&](std::size_t i) {
    out[i].tuple = per_tuple[i].tuple;
    out[i].entailed = decide(kind, sem, per_tuple[i].causes, conflicts, prio);
  };

  std::size_t n = per_tuple.size();
  std::size_t threads = jobs > 1 ? std::min<std::size_t>(static_cast<std::size_t>(jobs), n) : 1;
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) break;
          work(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace priorepair
