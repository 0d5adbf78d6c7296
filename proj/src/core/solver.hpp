#pragma once

// Minimal DPLL SAT solver with a theory hook. Literals are nonzero ints:
// +v asserts variable v, -v its negation; variables are 1-based.

#include <vector>

namespace priorepair {

// Receives every assignment the solver makes, in order. on_assign must apply
// the theory's state change unconditionally and return whether the theory is
// still consistent; on a false return the solver treats it as a conflict and
// will later call on_unassign for that variable while unwinding. Assignments
// are retracted in reverse order.
class TheoryListener {
 public:
  virtual ~TheoryListener() = default;
  virtual bool on_assign(int var, bool value) = 0;
  virtual void on_unassign(int var) = 0;
};

class SatSolver {
 public:
  int add_var();
  int num_vars() const { return num_vars_; }

  // Tautologies are dropped, duplicate literals merged; an empty clause makes
  // the instance unsatisfiable.
  void add_clause(std::vector<int> lits);

  // Variables are decided in the given order (remaining ones follow in
  // ascending index order). Unit propagation may assign out of order.
  void set_decision_order(std::vector<int> vars);

  // Chronological-backtracking search with full-scan unit propagation.
  // Expects the listener, if any, to start in its initial state.
  bool solve(TheoryListener* theory = nullptr);

  // Model value after solve() returned true.
  bool value(int var) const { return assign_[static_cast<std::size_t>(var)] == 1; }

 private:
  struct TrailEntry {
    int var;
    bool value;
    bool is_decision;
    bool flipped;
  };

  int lit_state(int lit) const;  // 1 satisfied, 0 falsified, -1 unassigned
  bool assign_lit(int lit, bool is_decision, TheoryListener* theory);
  bool propagate(TheoryListener* theory);
  bool backtrack(TheoryListener* theory);

  int num_vars_ = 0;
  bool trivially_unsat_ = false;
  std::vector<std::vector<int>> clauses_;
  std::vector<signed char> assign_;  // index by var; -1 unknown, 0 false, 1 true
  std::vector<TrailEntry> trail_;
  std::vector<int> order_;
};

}  // namespace priorepair
