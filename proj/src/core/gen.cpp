#include "core/gen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace priorepair {
namespace {

// Predicate for slot `pos` of a conflict of the given size; families for
// different sizes are disjoint so each group yields exactly one conflict.
std::string conflict_pred(int arity, int pos) {
  return "K" + std::to_string(arity) + static_cast<char>('A' + pos);
}

}  // namespace

GenOutput generate(const GenParams& p) {
  if (p.facts == 0) throw std::invalid_argument("facts must be positive");
  if (p.conflict_rate < 0.0 || p.conflict_rate > 1.0) throw std::invalid_argument("conflict_rate must be in [0, 1]");
  if (p.levels < 1) throw std::invalid_argument("levels must be positive");
  if (p.pref_density < 0.0 || p.pref_density > 1.0) throw std::invalid_argument("pref_density must be in [0, 1]");
  if (p.conflict_rate > 0.0 && p.max_conflict_arity < 2) {
    throw std::invalid_argument("max_conflict_arity must be at least 2 when conflict_rate > 0");
  }

  std::mt19937_64 rng(p.seed);
  GenOutput out;

  // Conflict groups: facts K<a>A(g) ... sharing a fresh group constant, so the
  // per-arity constraint makes each group one conflict of that exact size.
  std::uint64_t target = static_cast<std::uint64_t>(std::llround(p.conflict_rate * static_cast<double>(p.facts)));
  std::uint64_t id = 0;
  std::uint64_t gid = 0;
  std::vector<bool> arity_used(static_cast<std::size_t>(p.max_conflict_arity) + 1, false);
  while (target - id >= 2) {
    std::uint64_t room = target - id;
    int a = 2;
    if (p.max_conflict_arity > 2) a = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(p.max_conflict_arity - 1));
    if (static_cast<std::uint64_t>(a) > room) a = static_cast<int>(room);
    arity_used[static_cast<std::size_t>(a)] = true;
    ++gid;
    for (int pos = 0; pos < a; ++pos) {
      ++id;
      out.dkb += std::to_string(id) + " | " + conflict_pred(a, pos) + "(" + std::to_string(gid) + ")\n";
    }
  }
  while (id < p.facts) {
    ++id;
    out.dkb += std::to_string(id) + " | F(" + std::to_string(id) + ")\n";
  }

  for (int a = 2; a <= p.max_conflict_arity; ++a) {
    if (!arity_used[static_cast<std::size_t>(a)]) continue;
    for (int pos = 0; pos < a; ++pos) {
      if (pos) out.dc += ", ";
      out.dc += conflict_pred(a, pos) + "(x)";
    }
    out.dc += " -> bot\n";
  }

  // Each level ranks a pref_density share of the facts; the level's rule
  // prefers the lower rank. Ties stay unordered.
  std::uint64_t threshold = static_cast<std::uint64_t>(std::llround(p.pref_density * 1000000.0));
  for (int l = 1; l <= p.levels; ++l) {
    std::string rank = "R" + std::to_string(l);
    for (std::uint64_t i = 1; i <= p.facts; ++i) {
      bool ranked = rng() % 1000000 < threshold;
      std::uint64_t value = rng() % 1000000;
      if (ranked) out.meta += rank + "(#" + std::to_string(i) + ", " + std::to_string(value) + ")\n";
    }
    out.prefs += "[level " + std::to_string(l) + "]\n";
    out.prefs += "pref(x1, x2) <- " + rank + "(x1, y1), " + rank + "(x2, y2), y1 < y2\n";
  }

  return out;
}

}  // namespace priorepair
