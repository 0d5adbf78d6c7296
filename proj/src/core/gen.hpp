#pragma once

// Deterministic synthetic instance generator: produces the input files for a
// knowledge base with a controlled amount of conflicting facts, conflict
// sizes, preference levels, and preference density. Same parameters and seed
// give byte-identical output.

#include <cstdint>
#include <string>

namespace priorepair {

struct GenParams {
  std::uint64_t facts = 0;     // N >= 1
  double conflict_rate = 0.0;  // share of facts placed in conflicts, [0, 1]
  int max_conflict_arity = 2;  // largest conflict size, >= 2 when rate > 0
  int levels = 1;              // preference levels, >= 1
  double pref_density = 0.0;   // share of facts ranked per level, [0, 1]
  std::uint64_t seed = 0;
};

struct GenOutput {
  std::string dkb;    // dataset
  std::string dc;     // denial constraints
  std::string meta;   // per-level rank annotations
  std::string prefs;  // leveled preference rules over the ranks
};

// Throws std::invalid_argument on parameters outside the ranges above.
GenOutput generate(const GenParams& p);

}  // namespace priorepair
