#pragma once

// Body matcher: enumerates homomorphisms from a body (atoms over the dataset
// and the meta database, taxonomy atoms, identifier bindings, negated atoms,
// comparisons) into a knowledge base.
//
// Variables bind to values of three kinds: data constants, fact identifiers,
// predicate names. Predicate variables (%Name) live in their own namespace,
// keyed with a '%' prefix in bindings. Variables occurring only inside one
// negated atom are existential local to that atom. Comparisons other than
// = and != hold only between two data constants.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/kb.hpp"

namespace priorepair {

struct Value {
  enum class Kind : std::uint8_t { Const, Id, Pred };
  Kind kind = Kind::Const;
  Constant c;
  FactIndex id = 0;
  std::string pred;

  static Value make_const(Constant c0) {
    Value v;
    v.kind = Kind::Const;
    v.c = std::move(c0);
    return v;
  }
  static Value make_id(FactIndex i) {
    Value v;
    v.kind = Kind::Id;
    v.id = i;
    return v;
  }
  static Value make_pred(std::string p) {
    Value v;
    v.kind = Kind::Pred;
    v.pred = std::move(p);
    return v;
  }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Const: return a.c == b.c;
      case Kind::Id: return a.id == b.id;
      case Kind::Pred: return a.pred == b.pred;
    }
    return false;
  }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
    switch (a.kind) {
      case Kind::Const: return a.c <=> b.c;
      case Kind::Id: return a.id <=> b.id;
      default: return a.pred.compare(b.pred) <=> 0;
    }
  }
};

using Binding = std::map<std::string, Value>;

struct Match {
  Binding binding;
  std::vector<FactIndex> support;  // facts matched by positive dataset atoms; sorted, unique
};

struct MatchContext {
  const Dataset& data;
  const MetaDatabase& meta;
  const TaxonomyClosure& tax;
};

// True if op holds between the two values.
bool eval_comparison(CmpOp op, const Value& lhs, const Value& rhs);

// Calls cb for every match, in a deterministic order; cb returns false to
// stop the enumeration. seed pre-binds variables.
void match_body(const std::vector<BodyLiteral>& body, const MatchContext& ctx, const Binding& seed,
                const std::function<bool(const Match&)>& cb);

// Runs the same body once per seed, reusing the internal indexes across
// seeds. cb returning false stops the current seed's enumeration only.
void match_each(const std::vector<BodyLiteral>& body, const MatchContext& ctx,
                const std::vector<Binding>& seeds,
                const std::function<bool(std::size_t, const Match&)>& cb);

std::vector<Match> match_all(const std::vector<BodyLiteral>& body, const MatchContext& ctx, const Binding& seed = {});

// Convenience: wraps positive dataset atoms as body literals.
std::vector<BodyLiteral> atoms_as_body(const std::vector<BodyAtom>& atoms);

}  // namespace priorepair
