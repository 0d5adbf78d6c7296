#include "core/asp.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace priorepair {
namespace {

// ---------------------------------------------------------------------------
// Fixed program texts
// ---------------------------------------------------------------------------

const char kUp[] =
    "trans_cl(X, Y, I) :- pref_init(X, Y, I), not blocked(I).\n"
    "trans_cl(X, Y, I) :- level(I), trans_cl(X, Y, J), J<I, not blocked(I).\n"
    "trans_cl(X, Y, I) :- pref_init(X, Z, J), trans_cl(Z, Y, I), J<=I, not blocked(I).\n"
    "cycle(I) :- trans_cl(X, X, I).\n"
    "blocked(I) :- level(I), cycle(J), J<I.\n"
    "pref(X, Y) :- pref_init(X, Y, I), not cycle(I), not blocked(I).\n";

const char kDown[] =
    "trans_cl(X, Y, I) :- pref_init(X, Y, I).\n"
    "trans_cl(X, Y, I) :- pref_init(X, Z, I), trans_cl(Z, Y, J), J<=I.\n"
    "trans_cl(X, Y, I) :- pref_init(X, Z, J), trans_cl(Z, Y, I), J<=I.\n"
    "cycle(X, Y, I) :- pref_init(X, Y, I), trans_cl(Y, X, I).\n"
    "pref(X, Y) :- pref_init(X, Y, I), not cycle(X, Y, I).\n";

const char kRefinedUp[] =
    "trans_cl(X, Y, I) :- pref_init(X, Y, I).\n"
    "trans_cl(X, Y, I) :- level(I), rel(X, Y, J), J < I.\n"
    "trans_cl(X, Y, I) :- pref_init(X, Z, I), trans_cl(Z, Y, I).\n"
    "trans_cl(X, Y, I) :- trans_cl(X, Z, I), trans_cl(Z, Y, I).\n"
    "cycle(X, Y, I) :- pref_init(X, Y, I), trans_cl(Y, X, I).\n"
    "rel(X, Y, I) :- pref_init(X, Y, I), not cycle(X, Y, I).\n"
    "rel(X, Y, I) :- rel(X, Z, J), rel(Z, Y, I), J<=I.\n"
    "pref(X, Y) :- pref_init(X, Y, I), rel(X, Y, I).\n";

const char kGrounded[] =
    "-succ(I, J) :- level(I), level(J), level(Z), I < Z, Z < J.\n"
    "succ(I, J) :- level(I), level(J), I < J, not -succ(I, J).\n"
    "trans_cl_bis(X, Y, I, K) :- level(K), pref_init(X, Y, I), gamma(X, Y, I, K).\n"
    "trans_cl_bis(X, Y, I, K) :- level(I), level(K), trans_cl_bis(X, Y, J, K), J<=I.\n"
    "trans_cl_bis(X, Y, I, K) :- level(K), pref_init(X, Z, J), trans_cl_bis(Z, Y, I, K), J<=I, gamma(X, Z, I, K).\n"
    "gamma_plus(X, Y, K) :- level(I), level(K), pref_init(X, Y, I), trans_cl_bis(Y, X, J, K), J <= I.\n"
    "trans_cl(X, Y, I, K) :- level(I), level(K), pref_init(X, Y, I), not gamma_plus(X, Y, K), K>1.\n"
    "trans_cl(X, Y, I, K) :- level(I), level(J), level(K), trans_cl(X, Y, J, K), J<=I, not gamma_plus(X, Y, K), K>1.\n"
    "trans_cl(X, Y, I, K) :- level(I), level(J), level(K), pref_init(X, Z, J), trans_cl(Z, Y, I, K), J<=I, not gamma_plus(X, Y, K), K>1.\n"
    "cycle(X, Y, I, K) :- level(J), level(K), pref_init(X, Y, I), trans_cl(Y, X, J, K), J <= I.\n"
    "trans_cl(X, Y, I, 1) :- level(I), pref_init(X, Y, I).\n"
    "trans_cl(X, Y, I, 1) :- level(I), level(J), trans_cl(X, Y, J, 1), J<=I.\n"
    "trans_cl(X, Y, I, 1) :- level(I), level(J), pref_init(X, Z, J), trans_cl(Z, Y, I, 1), J<=I.\n"
    "gamma(X, Y, I, 1) :- pref_init(X, Y, I), not cycle(X, Y, I, 1).\n"
    "gamma(X, Y, I, L) :- level(K), pref_init(X, Y, I), not cycle(X, Y, I, K), succ(K, L).\n"
    "unstopped(K) :- level(I), level(L), gamma(X, Y, I, L), not gamma(X, Y, I, K), succ(K, L).\n"
    "pref(X, Y) :- level(K), gamma(X, Y, I, K), not unstopped(K).\n";

const char kMinConf[] =
    "-included(X, Y) :- conf_init(X), conf_init(Y), inConf_init(X, A), not inConf_init(Y, A).\n"
    "minimal(Y) :- conf_init(X), conf_init(Y), not -included(X, Y), -included(Y, X).\n"
    "conf(X) :- conf_init(X), not minimal(X).\n"
    "inConf(X, Y) :- inConf_init(X, Y), conf(X).\n";

const char kAtt[] =
    "-att(X, A) :- inConf(X, A), inConf(X, B), not A = B, pref(A, B).\n"
    "att(X, A) :- inConf(X, A), not -att(X, A).\n";

const char kLoc[] =
    "cause_fact(A) :- inCause(C, A), cause(C).\n"
    "reachable(A) :- cause_fact(A).\n"
    "reachable(A) :- reachable(B), att(X, B), inConf(X, A).\n";

const char kLocIar[] =
    "cause_fact(A, C) :- inCause(C, A), cause(C).\n"
    "reachable(A, C) :- cause_fact(A, C).\n"
    "reachable(A, C) :- reachable(B, C), att(X, B), inConf(X, A).\n";

const char kCons[] =
    "conf_rel(X) :- inConf(X, A), reachable(A).\n"
    "1 {rem(A):inConf(X, A)} :- conf_rel(X).\n"
    "in(A) :- reachable(A), not rem(A).\n";

const char kConsIar[] =
    "conf_rel(X, C) :- inConf(X, A), reachable(A, C).\n"
    "1 {rem(A, C):inConf(X, A)} :- conf_rel(X, C).\n"
    "in(A, C) :- reachable(A, C), not rem(A, C).\n";

const char kBrave[] =
    "-sat(C) :- inCause(C, A), not in(A).\n"
    "sat :- cause(C), not -sat(C).\n"
    ":- not sat.\n";

const char kAr[] =
    "invalid_conf(X, A) :- reachable(A), att(X, A), inConf(X, B), not in(B), not A = B.\n"
    "neg(C) :- cause(C), inCause(C, A), att(X, A), not invalid_conf(X, A).\n"
    ":- cause(C), not neg(C).\n";

const char kArIar[] =
    "invalid_conf(X, A, C) :- reachable(A, C), att(X, A), inConf(X, B), not in(B, C), not A = B.\n"
    "neg(C) :- cause(C), inCause(C, A), att(X, A), not invalid_conf(X, A, C).\n"
    ":- cause(C), not neg(C).\n";

const char kPareto[] =
    "valid(A) :- reachable(A), in(A).\n"
    "invalid_att(X, A) :- reachable(A), att(X, A), inConf(X, B), not in(B), not A = B.\n"
    "valid(A) :- reachable(A), conf(X), not in(A), att(X, A), not invalid_att(X, A).\n"
    ":- reachable(A), not valid(A).\n";

const char kParetoIar[] =
    "valid(A, C) :- reachable(A, C), in(A, C).\n"
    "invalid_att(X, A, C) :- reachable(A, C), att(X, A), inConf(X, B), not in(B, C), not A = B.\n"
    "valid(A, C) :- reachable(A, C), conf(X), not in(A, C), att(X, A), not invalid_att(X, A, C).\n"
    ":- reachable(A, C), not valid(A, C).\n";

const char kCompletion[] =
    "valid(A) :- reachable(A), in(A).\n"
    "invalid_att(X, A) :- reachable(A), not in(A), inConf(X, A), not A = B, inConf(X, B), not in(B).\n"
    "invalid_att(X, A) :- reachable(A), not in(A), inConf(X, A), inConf(X, B), not A = B, pref_comp(A, B).\n"
    "valid(A) :- reachable(A), not in(A), inConf(X, A), not invalid_att(X, A).\n"
    ":- reachable(A), not valid(A).\n"
    "pref_comp(A, B) :- reachable(A), reachable(B), pref(A, B).\n"
    "1 {pref_comp(A, B); pref_comp(B, A)} 1 :- reachable(A), reachable(B), inConf(X, A), inConf(X, B), not pref(A, B), not pref(B, A), not A = B.\n"
    "trans_cl_comp(A, B) :- pref_comp(A, B).\n"
    "trans_cl_comp(A, B) :- trans_cl_comp(A, Y), pref_comp(Y, B).\n"
    ":- trans_cl_comp(A, A).\n";

const char kCompletionIar[] =
    "valid(A, C) :- reachable(A, C), in(A, C).\n"
    "invalid_att(X, A, C) :- reachable(A, C), not in(A, C), inConf(X, A), not A = B, inConf(X, B), not in(B, C).\n"
    "invalid_att(X, A, C) :- reachable(A, C), not in(A, C), inConf(X, A), inConf(X, B), not A = B, pref_comp(A, B, C).\n"
    "valid(A, C) :- reachable(A, C), not in(A, C), inConf(X, A), not invalid_att(X, A, C).\n"
    ":- reachable(A, C), not valid(A, C).\n"
    "pref_comp(A, B, C) :- reachable(A, C), reachable(B, C), pref(A, B).\n"
    "1 {pref_comp(A, B, C); pref_comp(B, A, C)} 1 :- reachable(A, C), reachable(B, C), inConf(X, A), inConf(X, B), not pref(A, B), not pref(B, A), not A = B.\n"
    "trans_cl_comp(A, B, C) :- pref_comp(A, B, C).\n"
    "trans_cl_comp(A, B, C) :- trans_cl_comp(A, Y, C), pref_comp(Y, B, C).\n"
    ":- trans_cl_comp(A, A, C).\n";

// ---------------------------------------------------------------------------
// Name sanitization
// ---------------------------------------------------------------------------

// Lowercase tokens the fixed programs already use; user names must not shadow
// them.
const std::set<std::string>& reserved_tokens() {
  static const std::set<std::string> kReserved = {
      "att",        "blocked",    "cause",       "cause_fact", "conf",
      "conf_init",  "conf_rel",   "cycle",       "data",       "gamma",
      "gamma_plus", "in",         "included",    "invalid_att",
      "invalid_conf", "level",    "minimal",     "neg",        "not",
      "pref",       "pref_comp",  "pref_init",   "reachable",  "rel",
      "rem",        "sat",        "succ",        "trans_cl",   "trans_cl_bis",
      "trans_cl_comp", "unstopped", "valid",
  };
  return kReserved;
}

// Maps one namespace (predicates or constants) to solver-safe tokens:
// integers pass through, letters are lowercased, anything else is rejected;
// tokens that start badly or shadow a reserved or already-taken name get the
// namespace prefix and a numeric suffix. The assignment is deterministic in
// first-use order and remembered so it is reversible.
class NameMap {
 public:
  NameMap(std::string prefix, const char* what) : prefix_(std::move(prefix)), what_(what) {}

  std::string get(const std::string& original) {
    auto it = map_.find(original);
    if (it != map_.end()) return it->second;
    std::string s = assign(original);
    map_.emplace(original, s);
    if (s != original) renamed_.emplace_back(original, s);
    return s;
  }

  const std::vector<std::pair<std::string, std::string>>& renamed() const { return renamed_; }

 private:
  std::string assign(const std::string& original) {
    if (parse_integer_token(original)) return original;
    std::string s;
    s.reserve(original.size());
    for (char ch : original) {
      unsigned char u = static_cast<unsigned char>(ch);
      if (std::isupper(u)) {
        s.push_back(static_cast<char>(std::tolower(u)));
      } else if (std::islower(u) || std::isdigit(u) || ch == '_') {
        s.push_back(ch);
      } else {
        throw EmitError(std::string("unsanitizable ") + what_ + " '" + original + "'");
      }
    }
    if (s.empty()) throw EmitError(std::string("unsanitizable ") + what_ + " ''");
    bool bad_start = !std::islower(static_cast<unsigned char>(s[0]));
    if (bad_start || reserved_tokens().count(s)) s = prefix_ + s;
    if (used_.count(s)) {
      int n = 2;
      while (used_.count(s + "_" + std::to_string(n))) ++n;
      s += "_" + std::to_string(n);
    }
    used_.insert(s);
    return s;
  }

  std::string prefix_;
  const char* what_;
  std::map<std::string, std::string> map_;
  std::set<std::string> used_;
  std::vector<std::pair<std::string, std::string>> renamed_;
};

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

// User variables are [u-z][0-9]*, so uppercasing the first letter can only
// produce U..Z names; generated variables (C, Id*) stay clear of that range
// and X*/Y* generators skip taken names.
std::string asp_var(const std::string& name) {
  if (!name.empty() && name[0] == '_') return "_";
  std::string s = name;
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string render_term(const Term& t, NameMap& consts) {
  return t.is_var ? asp_var(t.var) : consts.get(t.c.lexeme());
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

// p(First, t1, ..., tn) with an optional injected first argument.
std::string render_atom(const std::string& pred, const std::string& first,
                        const std::vector<Term>& args, NameMap& consts) {
  std::vector<std::string> xs;
  if (!first.empty()) xs.push_back(first);
  for (const Term& t : args) xs.push_back(render_term(t, consts));
  return pred + "(" + join(xs, ", ") + ")";
}

// Fresh variable names X0, X1, ... (or Y0, ...) skipping taken ones.
class FreshVars {
 public:
  FreshVars(char prefix, const std::set<std::string>* taken) : prefix_(prefix), taken_(taken) {}
  std::string next() {
    for (;;) {
      std::string v = std::string(1, prefix_) + std::to_string(n_++);
      if (!taken_->count(v)) return v;
    }
  }

 private:
  char prefix_;
  int n_ = 0;
  const std::set<std::string>* taken_;
};

void add_term_vars(const std::vector<Term>& args, std::set<std::string>* out) {
  for (const Term& t : args) {
    if (t.is_var && t.var[0] != '_') out->insert(asp_var(t.var));
  }
}

// Enumerates assignments of the rule's predicate variables over the taxonomy
// predicates, keeping those under which every taxonomy literal holds.
std::vector<std::map<std::string, std::string>> pred_var_assignments(
    const PreferenceRule& rule, const TaxonomyClosure& tc) {
  std::vector<std::string> vars;
  auto note = [&vars](const PredTerm& p) {
    if (p.is_var && std::find(vars.begin(), vars.end(), p.name) == vars.end()) vars.push_back(p.name);
  };
  for (const BodyLiteral& lit : rule.body) {
    if (lit.kind == BodyLiteral::Kind::Sub) {
      note(lit.sub.sub);
      note(lit.sub.sup);
    } else if (lit.kind == BodyLiteral::Kind::Binding) {
      note(lit.binding.pred);
    }
  }

  const std::vector<std::string>& domain = tc.predicates();
  std::vector<std::map<std::string, std::string>> out;
  std::map<std::string, std::string> cur;
  auto resolve = [&cur](const PredTerm& p) { return p.is_var ? cur.at(p.name) : p.name; };
  auto admits = [&]() {
    for (const BodyLiteral& lit : rule.body) {
      if (lit.kind != BodyLiteral::Kind::Sub) continue;
      if (!tc.holds(resolve(lit.sub.sub), resolve(lit.sub.sup))) return false;
    }
    return true;
  };
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == vars.size()) {
      if (admits()) out.push_back(cur);
      return;
    }
    for (const std::string& p : domain) {
      cur[vars[i]] = p;
      self(self, i + 1);
    }
  };
  go(go, 0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// emit_input
// ---------------------------------------------------------------------------

AspInput emit_input(const Dataset& data, const MetaDatabase& meta,
                    const std::vector<DenialConstraint>& dcs,
                    const QueryRewriting& query,
                    const std::vector<PreferenceRule>& rules,
                    const Taxonomy& tax) {
  AspInput out;
  NameMap preds("p_", "predicate");
  NameMap consts("c_", "constant");

  // Facts: data(i). p(i,...). one dataset fact per line.
  for (FactIndex i = 0; i < data.size(); ++i) {
    const Fact& f = data.fact(i);
    std::string id = consts.get(data.id(i));
    out.data += "data(" + id + "). " + preds.get(f.pred) + "(" + id;
    for (const Constant& a : f.args) out.data += "," + consts.get(a.lexeme());
    out.data += ").\n";
  }

  // Side information as plain facts; references render as the fact identifier.
  for (std::size_t i = 0; i < meta.size(); ++i) {
    const MetaFact& f = meta.fact(i);
    out.meta += preds.get(f.pred) + "(";
    for (std::size_t j = 0; j < f.args.size(); ++j) {
      if (j) out.meta += ",";
      const MetaValue& v = f.args[j];
      out.meta += v.kind == MetaValue::Kind::Ref ? consts.get(data.id(v.ref)) : consts.get(v.c.lexeme());
    }
    out.meta += ").\n";
  }

  // Constraints: one conf_init rule plus one inConf_init rule per member.
  for (const DenialConstraint& dc : dcs) {
    std::vector<std::string> body;
    std::vector<std::string> idv;
    for (std::size_t j = 0; j < dc.atoms.size(); ++j) {
      idv.push_back("Id" + std::to_string(j));
      body.push_back(render_atom(preds.get(dc.atoms[j].pred), idv[j], dc.atoms[j].args, consts));
    }
    for (const Comparison& ne : dc.neqs) {
      body.push_back(render_term(ne.lhs, consts) + " " + cmp_op_text(ne.op) + " " + render_term(ne.rhs, consts));
    }
    std::string tuple = "(" + join(idv, ", ") + ")";
    std::string rhs = " :- " + join(body, ", ") + ".\n";
    out.constraints += "conf_init(" + tuple + ")" + rhs;
    for (const std::string& v : idv) out.constraints += "inConf_init(" + tuple + ", " + v + ")" + rhs;
  }

  // Query: cause keeps the answer tuple, inCause keys on the identifier tuple.
  for (const QueryRewriting::CQ& cq : query.bodies) {
    std::vector<std::string> ans;
    for (const std::string& v : cq.answer_vars) ans.push_back(asp_var(v));
    std::vector<std::string> body;
    std::vector<std::string> idv;
    for (std::size_t j = 0; j < cq.atoms.size(); ++j) {
      idv.push_back("Id" + std::to_string(j));
      body.push_back(render_atom(preds.get(cq.atoms[j].pred), idv[j], cq.atoms[j].args, consts));
    }
    std::string ansTuple = "(" + join(ans, ", ") + ")";
    std::string idTuple = "(" + join(idv, ", ") + ")";
    std::string rhs = " :- " + join(body, ", ") + ".\n";
    out.causes += "cause(" + ansTuple + ", " + idTuple + ")" + rhs;
    for (const std::string& v : idv) out.causes += "inCause(" + idTuple + ", " + v + ")" + rhs;
  }

  // Preference rules, predicate variables expanded over the taxonomy.
  TaxonomyClosure tc(tax, data);
  std::set<int> levels;
  for (const PreferenceRule& rule : rules) {
    levels.insert(rule.level);

    std::set<std::string> taken;  // uppercased user variables; fresh vars avoid them
    taken.insert(asp_var(rule.v1));
    taken.insert(asp_var(rule.v2));
    for (const BodyLiteral& lit : rule.body) {
      switch (lit.kind) {
        case BodyLiteral::Kind::Atom:
        case BodyLiteral::Kind::NegAtom:
          add_term_vars(lit.atom.args, &taken);
          break;
        case BodyLiteral::Kind::Binding:
          taken.insert(asp_var(lit.binding.var));
          add_term_vars(lit.binding.args, &taken);
          break;
        case BodyLiteral::Kind::Cmp:
          add_term_vars({lit.cmp.lhs, lit.cmp.rhs}, &taken);
          break;
        case BodyLiteral::Kind::Sub:
          break;
      }
    }

    std::set<std::string> unsafe;
    for (const auto& assign : pred_var_assignments(rule, tc)) {
      FreshVars xs('X', &taken);
      FreshVars ys('Y', &taken);
      std::vector<std::string> pos_data, neg_data, pos_meta, neg_meta, cmps, binds;
      std::set<std::string> bound = {"C", asp_var(rule.v1), asp_var(rule.v2)};
      std::set<std::string> need;

      for (const BodyLiteral& lit : rule.body) {
        switch (lit.kind) {
          case BodyLiteral::Kind::Atom:
            if (meta.signature_of(lit.atom.pred)) {
              pos_meta.push_back(render_atom(preds.get(lit.atom.pred), "", lit.atom.args, consts));
            } else {
              pos_data.push_back(render_atom(preds.get(lit.atom.pred), xs.next(), lit.atom.args, consts));
            }
            add_term_vars(lit.atom.args, &bound);
            break;
          case BodyLiteral::Kind::NegAtom:
            if (meta.signature_of(lit.atom.pred)) {
              neg_meta.push_back("not " + render_atom(preds.get(lit.atom.pred), "", lit.atom.args, consts));
            } else {
              std::string y = ys.next();
              need.insert(y);
              neg_data.push_back("not " + render_atom(preds.get(lit.atom.pred), y, lit.atom.args, consts));
            }
            add_term_vars(lit.atom.args, &need);
            break;
          case BodyLiteral::Kind::Binding: {
            std::string p = lit.binding.pred.is_var ? assign.at(lit.binding.pred.name) : lit.binding.pred.name;
            binds.push_back(render_atom(preds.get(p), asp_var(lit.binding.var), lit.binding.args, consts));
            bound.insert(asp_var(lit.binding.var));
            add_term_vars(lit.binding.args, &bound);
            break;
          }
          case BodyLiteral::Kind::Cmp:
            cmps.push_back(render_term(lit.cmp.lhs, consts) + " " + cmp_op_text(lit.cmp.op) + " " +
                           render_term(lit.cmp.rhs, consts));
            add_term_vars({lit.cmp.lhs, lit.cmp.rhs}, &need);
            break;
          case BodyLiteral::Kind::Sub:
            break;  // consumed by the predicate-variable expansion
        }
      }

      std::vector<std::string> body;
      body.push_back("inConf(C, " + asp_var(rule.v1) + ")");
      body.push_back("inConf(C, " + asp_var(rule.v2) + ")");
      for (auto* group : {&pos_data, &neg_data, &pos_meta, &neg_meta, &cmps, &binds}) {
        body.insert(body.end(), group->begin(), group->end());
      }
      out.prefs += "pref_init(" + asp_var(rule.v1) + ", " + asp_var(rule.v2) + ", " +
                   std::to_string(rule.level) + ") :- " + join(body, ", ") + ".\n";

      for (const std::string& v : need) {
        if (!bound.count(v)) unsafe.insert(v);
      }
    }
    if (!unsafe.empty()) {
      std::vector<std::string> vs(unsafe.begin(), unsafe.end());
      out.warnings.push_back("rule at line " + std::to_string(rule.line) + ": variable" +
                             (vs.size() > 1 ? "s " : " ") + join(vs, ", ") +
                             " occur(s) only in negated atoms or comparisons; emitted verbatim, but a"
                             " strict grounder may reject the rule as unsafe");
    }
  }
  for (int l : levels) out.prefs += "level(" + std::to_string(l) + ").\n";

  // Reversible name mapping, appended as comments.
  for (const auto& kv : preds.renamed()) out.data += "% pred " + kv.second + " = " + kv.first + "\n";
  for (const auto& kv : consts.renamed()) out.data += "% const " + kv.second + " = " + kv.first + "\n";

  return out;
}

// ---------------------------------------------------------------------------
// Fixed programs
// ---------------------------------------------------------------------------

std::string emit_priority(Strategy s) {
  switch (s) {
    case Strategy::Up:
      return kUp;
    case Strategy::Down:
      return kDown;
    case Strategy::RefinedUp:
      return kRefinedUp;
    case Strategy::Grounded:
      return kGrounded;
  }
  return {};
}

std::string emit_minconf() { return kMinConf; }

std::string emit_semantics(RepairKind kind, Semantics sem) {
  std::string out = kAtt;
  if (sem == Semantics::IAR) {
    out += kLocIar;
    out += kConsIar;
    out += kArIar;
    if (kind == RepairKind::Pareto) out += kParetoIar;
    if (kind == RepairKind::Completion) out += kCompletionIar;
  } else {
    out += kLoc;
    out += kCons;
    out += sem == Semantics::Brave ? kBrave : kAr;
    if (kind == RepairKind::Pareto) out += kPareto;
    if (kind == RepairKind::Completion) out += kCompletion;
  }
  return out;
}

}  // namespace priorepair
