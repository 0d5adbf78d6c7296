#pragma once

// Core knowledge-base types: identified ground facts, meta facts that
// annotate them, taxonomy edges over predicate names, denial constraints,
// union-of-CQ rewritings, leveled preference rules, and the derived
// conflict / cause / priority structures.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace priorepair {

// Dense handle into Dataset; external fact identifiers are opaque tokens.
using FactIndex = std::uint32_t;

// ---------------------------------------------------------------------------
// Constants and tokens
// ---------------------------------------------------------------------------

// A data constant: a 64-bit integer or an uninterpreted symbol. All integers
// order before all symbols; symbols order by byte (= code point for UTF-8).
struct Constant {
  enum class Kind : std::uint8_t { Int, Sym };
  Kind kind = Kind::Sym;
  std::int64_t num = 0;
  std::string sym;

  static Constant integer(std::int64_t v) {
    Constant c;
    c.kind = Kind::Int;
    c.num = v;
    return c;
  }
  static Constant symbol(std::string s) {
    Constant c;
    c.kind = Kind::Sym;
    c.sym = std::move(s);
    return c;
  }

  std::string lexeme() const { return kind == Kind::Int ? std::to_string(num) : sym; }

  friend bool operator==(const Constant& a, const Constant& b) {
    if (a.kind != b.kind) return false;
    return a.kind == Kind::Int ? a.num == b.num : a.sym == b.sym;
  }
  friend std::strong_ordering operator<=>(const Constant& a, const Constant& b) {
    if (a.kind != b.kind) return a.kind == Kind::Int ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.kind == Kind::Int) return a.num <=> b.num;
    return a.sym.compare(b.sym) <=> 0;
  }
};

// Orders identifier tokens the way constants order: tokens that read as
// integers compare numerically and before everything else; ties and
// non-numeric tokens fall back to byte order. Total and deterministic.
bool token_less(const std::string& a, const std::string& b);

// True if tok parses as a (possibly negative) decimal integer fitting int64.
std::optional<std::int64_t> parse_integer_token(const std::string& tok);

// ---------------------------------------------------------------------------
// Dataset
// ---------------------------------------------------------------------------

struct Fact {
  std::string pred;
  std::vector<Constant> args;

  friend bool operator==(const Fact& a, const Fact& b) { return a.pred == b.pred && a.args == b.args; }
  friend auto operator<=>(const Fact& a, const Fact& b) {
    if (auto c = a.pred.compare(b.pred) <=> 0; c != 0) return c;
    return a.args <=> b.args;
  }
};

// Set of identified facts. Identifiers are unique, the id -> fact map is
// injective, and each predicate has one arity.
class Dataset {
 public:
  FactIndex add(std::string id, Fact fact);  // precondition: passes the find_* checks

  std::optional<FactIndex> find_id(const std::string& id) const;
  std::optional<FactIndex> find_fact(const Fact& fact) const;
  std::optional<std::size_t> arity_of(const std::string& pred) const;

  FactIndex size() const { return static_cast<FactIndex>(facts_.size()); }
  const Fact& fact(FactIndex i) const { return facts_[i]; }
  const std::string& id(FactIndex i) const { return ids_[i]; }
  const std::vector<FactIndex>& of_pred(const std::string& pred) const;
  const std::map<std::string, std::vector<FactIndex>>& by_pred() const { return by_pred_; }

 private:
  std::vector<std::string> ids_;
  std::vector<Fact> facts_;
  std::unordered_map<std::string, FactIndex> id_to_index_;
  std::map<Fact, FactIndex> fact_to_index_;
  std::map<std::string, std::vector<FactIndex>> by_pred_;
};

// ---------------------------------------------------------------------------
// Meta database
// ---------------------------------------------------------------------------

// Argument of a meta fact: either a reference to a dataset fact or a constant.
struct MetaValue {
  enum class Kind : std::uint8_t { Ref, Const };
  Kind kind = Kind::Const;
  FactIndex ref = 0;
  Constant c;

  static MetaValue make_ref(FactIndex i) {
    MetaValue v;
    v.kind = Kind::Ref;
    v.ref = i;
    return v;
  }
  static MetaValue make_const(Constant c0) {
    MetaValue v;
    v.kind = Kind::Const;
    v.c = std::move(c0);
    return v;
  }

  friend bool operator==(const MetaValue& a, const MetaValue& b) {
    if (a.kind != b.kind) return false;
    return a.kind == Kind::Ref ? a.ref == b.ref : a.c == b.c;
  }
  friend auto operator<=>(const MetaValue& a, const MetaValue& b) {
    if (a.kind != b.kind) return a.kind == Kind::Ref ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.kind == Kind::Ref) return a.ref <=> b.ref;
    return a.c <=> b.c;
  }
};

struct MetaFact {
  std::string pred;
  std::vector<MetaValue> args;

  friend bool operator==(const MetaFact& a, const MetaFact& b) { return a.pred == b.pred && a.args == b.args; }
  friend auto operator<=>(const MetaFact& a, const MetaFact& b) {
    if (auto c = a.pred.compare(b.pred) <=> 0; c != 0) return c;
    return a.args <=> b.args;
  }
};

// Each meta predicate fixes, at its first occurrence, which argument
// positions hold fact references; every later fact must agree. Duplicate
// facts collapse (set semantics).
class MetaDatabase {
 public:
  struct Signature {
    std::size_t arity = 0;
    std::vector<bool> id_positions;
  };

  // Returns false without inserting when the fact is a duplicate.
  bool add(MetaFact fact);  // precondition: signature_of(pred) absent or matching

  const Signature* signature_of(const std::string& pred) const;
  static Signature signature_for(const MetaFact& fact);

  std::size_t size() const { return facts_.size(); }
  const MetaFact& fact(std::size_t i) const { return facts_[i]; }
  const std::vector<std::uint32_t>& of_pred(const std::string& pred) const;
  const std::map<std::string, std::vector<std::uint32_t>>& by_pred() const { return by_pred_; }

 private:
  std::vector<MetaFact> facts_;
  std::set<MetaFact> dedup_;
  std::map<std::string, Signature> signatures_;
  std::map<std::string, std::vector<std::uint32_t>> by_pred_;
};

// ---------------------------------------------------------------------------
// Taxonomy
// ---------------------------------------------------------------------------

// Stored specialization edges between predicate names (child < parent).
struct Taxonomy {
  std::vector<std::pair<std::string, std::string>> edges;
};

// Reflexive-transitive closure of the taxonomy over the predicate names of
// the dataset and the taxonomy itself.
class TaxonomyClosure {
 public:
  TaxonomyClosure() = default;
  TaxonomyClosure(const Taxonomy& tax, const Dataset& data);

  bool holds(const std::string& sub, const std::string& sup) const;
  const std::vector<std::string>& predicates() const { return preds_; }
  // Strict pairs only; reflexive pairs are implied for every known predicate.
  const std::set<std::pair<std::string, std::string>>& strict_pairs() const { return strict_; }

 private:
  std::vector<std::string> preds_;
  std::set<std::string> pred_set_;
  std::set<std::pair<std::string, std::string>> strict_;
};

// ---------------------------------------------------------------------------
// Body IR shared by constraints, queries, and preference rules
// ---------------------------------------------------------------------------

// Variable or constant in an atom argument position. Anonymous `_` terms are
// renamed to fresh variables at parse time.
struct Term {
  bool is_var = false;
  std::string var;
  Constant c;

  static Term make_var(std::string name) {
    Term t;
    t.is_var = true;
    t.var = std::move(name);
    return t;
  }
  static Term make_const(Constant c0) {
    Term t;
    t.is_var = false;
    t.c = std::move(c0);
    return t;
  }
};

// Predicate-name slot: a concrete name or a predicate variable (%Name).
struct PredTerm {
  bool is_var = false;
  std::string name;
};

struct BodyAtom {
  std::string pred;  // resolved against the meta database at evaluation time
  std::vector<Term> args;
};

struct SubAtom {
  PredTerm sub;
  PredTerm sup;
};

// var = id[P(args)] : binds var to the identifier of a matching dataset fact.
struct IdBinding {
  std::string var;
  PredTerm pred;
  std::vector<Term> args;
};

enum class CmpOp : std::uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

const char* cmp_op_text(CmpOp op);  // "=", "!=", "<", "<=", ">", ">="

struct Comparison {
  CmpOp op = CmpOp::Eq;
  Term lhs;
  Term rhs;
};

struct BodyLiteral {
  enum class Kind : std::uint8_t { Atom, NegAtom, Sub, Binding, Cmp };
  Kind kind = Kind::Atom;
  BodyAtom atom;      // Atom, NegAtom
  SubAtom sub;        // Sub
  IdBinding binding;  // Binding
  Comparison cmp;     // Cmp
};

// ---------------------------------------------------------------------------
// Constraints, queries, rules
// ---------------------------------------------------------------------------

// Relational atoms plus disequalities; a match witnesses an inconsistency.
// Safety: every variable occurs in some relational atom.
struct DenialConstraint {
  std::vector<BodyAtom> atoms;
  std::vector<Comparison> neqs;  // op is always Ne
};

// Union of conjunctive queries under one name. Bodies are positive atoms
// over the dataset; each body binds every answer variable.
struct QueryRewriting {
  struct CQ {
    std::vector<std::string> answer_vars;
    std::vector<BodyAtom> atoms;
  };
  std::string name;
  std::vector<CQ> bodies;
};

// pref(v1, v2) <- body, evaluated at a level (>= 1). Head variables must be
// bound to fact identifiers by the body.
struct PreferenceRule {
  int level = 1;
  std::string v1;
  std::string v2;
  std::vector<BodyLiteral> body;
  int line = 0;  // for diagnostics
};

// ---------------------------------------------------------------------------
// Derived structures
// ---------------------------------------------------------------------------

// Inclusion-minimal inconsistent subset; members sorted, size >= 1.
using Conflict = std::vector<FactIndex>;

// Fact set supporting one answer tuple of one CQ body; members sorted.
struct CauseCandidate {
  std::vector<Constant> tuple;
  std::vector<FactIndex> facts;

  friend bool operator==(const CauseCandidate& a, const CauseCandidate& b) {
    return a.tuple == b.tuple && a.facts == b.facts;
  }
  friend auto operator<=>(const CauseCandidate& a, const CauseCandidate& b) {
    if (auto c = a.tuple <=> b.tuple; c != 0) return c;
    return a.facts <=> b.facts;
  }
};

// One preference between identified facts, tagged with the least level of a
// rule that induces it.
struct PrefStatement {
  FactIndex from = 0;
  FactIndex to = 0;
  int level = 1;

  friend bool operator==(const PrefStatement&, const PrefStatement&) = default;
};

// Strict priority over dataset facts; the producing functions guarantee
// acyclicity and that each pair co-occurs in some conflict.
struct PriorityRelation {
  std::vector<std::pair<FactIndex, FactIndex>> pairs;  // sorted, unique

  bool contains(FactIndex a, FactIndex b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  }
};

// True if the directed graph given by the pairs has no cycle.
bool pairs_acyclic(const std::vector<std::pair<FactIndex, FactIndex>>& pairs);

// All unordered pairs {a, b} that co-occur in some conflict, as ordered
// (min, max) entries.
std::set<std::pair<FactIndex, FactIndex>> conflicting_pairs(const std::vector<Conflict>& conflicts);

}  // namespace priorepair
