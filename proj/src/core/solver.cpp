#include "core/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace priorepair {

int SatSolver::add_var() {
  ++num_vars_;
  return num_vars_;
}

void SatSolver::add_clause(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end(), [](int a, int b) {
    int va = std::abs(a), vb = std::abs(b);
    return va != vb ? va < vb : a < b;
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if (lits[i] == -lits[i + 1]) return;  // tautology
  if (lits.empty()) {
    trivially_unsat_ = true;
    return;
  }
  for ([[maybe_unused]] int lit : lits) assert(lit != 0 && std::abs(lit) <= num_vars_);
  clauses_.push_back(std::move(lits));
}

void SatSolver::set_decision_order(std::vector<int> vars) {
  order_ = std::move(vars);
}

int SatSolver::lit_state(int lit) const {
  signed char a = assign_[static_cast<std::size_t>(std::abs(lit))];
  if (a < 0) return -1;
  return (a == 1) == (lit > 0) ? 1 : 0;
}

bool SatSolver::assign_lit(int lit, bool is_decision, TheoryListener* theory) {
  int var = std::abs(lit);
  bool value = lit > 0;
  assign_[static_cast<std::size_t>(var)] = value ? 1 : 0;
  trail_.push_back({var, value, is_decision, false});
  return !theory || theory->on_assign(var, value);
}

bool SatSolver::propagate(TheoryListener* theory) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& clause : clauses_) {
      int unassigned_lit = 0, unassigned = 0;
      bool satisfied = false;
      for (int lit : clause) {
        int s = lit_state(lit);
        if (s == 1) {
          satisfied = true;
          break;
        }
        if (s == -1) {
          ++unassigned;
          unassigned_lit = lit;
          if (unassigned > 1) break;
        }
      }
      if (satisfied || unassigned > 1) continue;
      if (unassigned == 0) return false;
      if (!assign_lit(unassigned_lit, false, theory)) return false;
      changed = true;
    }
  }
  return true;
}

bool SatSolver::backtrack(TheoryListener* theory) {
  while (!trail_.empty()) {
    TrailEntry& e = trail_.back();
    if (e.is_decision && !e.flipped) {
      if (theory) theory->on_unassign(e.var);
      e.value = !e.value;
      e.flipped = true;
      assign_[static_cast<std::size_t>(e.var)] = e.value ? 1 : 0;
      if (!theory || theory->on_assign(e.var, e.value)) return true;
      // The flipped polarity is theory-inconsistent too: discard the entry.
    }
    assign_[static_cast<std::size_t>(e.var)] = -1;
    if (theory) theory->on_unassign(e.var);
    trail_.pop_back();
  }
  return false;
}

bool SatSolver::solve(TheoryListener* theory) {
  if (trivially_unsat_) return false;
  assign_.assign(static_cast<std::size_t>(num_vars_) + 1, -1);
  trail_.clear();

  std::vector<int> order = order_;
  {
    std::vector<char> listed(static_cast<std::size_t>(num_vars_) + 1, 0);
    for (int v : order) listed[static_cast<std::size_t>(v)] = 1;
    for (int v = 1; v <= num_vars_; ++v)
      if (!listed[static_cast<std::size_t>(v)]) order.push_back(v);
  }

  for (;;) {
    if (!propagate(theory)) {
      if (!backtrack(theory)) return false;
      continue;
    }
    int next = 0;
    for (int v : order) {
      if (assign_[static_cast<std::size_t>(v)] < 0) {
        next = v;
        break;
      }
    }
    if (next == 0) return true;
    if (!assign_lit(next, true, theory)) {
      if (!backtrack(theory)) return false;
    }
  }
}

}  // namespace priorepair
