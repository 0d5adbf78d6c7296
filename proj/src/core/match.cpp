#include "core/match.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace priorepair {

bool eval_comparison(CmpOp op, const Value& lhs, const Value& rhs) {
  switch (op) {
    case CmpOp::Eq: return lhs == rhs;
    case CmpOp::Ne: return !(lhs == rhs);
    default: break;
  }
  if (lhs.kind != Value::Kind::Const || rhs.kind != Value::Kind::Const) return false;
  auto c = lhs.c <=> rhs.c;
  switch (op) {
    case CmpOp::Lt: return c < 0;
    case CmpOp::Le: return c <= 0;
    case CmpOp::Gt: return c > 0;
    case CmpOp::Ge: return c >= 0;
    default: return false;
  }
}

namespace {

std::string const_key(const Constant& c) {
  return (c.kind == Constant::Kind::Int ? "i:" : "s:") + c.lexeme();
}

std::string meta_key(const MetaValue& v) {
  return v.kind == MetaValue::Kind::Ref ? "r:" + std::to_string(v.ref) : const_key(v.c);
}

std::string pred_var_key(const std::string& name) { return "%" + name; }

class Evaluator {
 public:
  Evaluator(const std::vector<BodyLiteral>& body, const MatchContext& ctx) : ctx_(ctx) {
    for (const BodyLiteral& l : body) {
      switch (l.kind) {
        case BodyLiteral::Kind::Atom:
        case BodyLiteral::Kind::Binding:
        case BodyLiteral::Kind::Sub: positives_.push_back(&l); break;
        case BodyLiteral::Kind::NegAtom:
        case BodyLiteral::Kind::Cmp: checks_.push_back({&l, {}, false}); break;
      }
    }
    // A variable of a negated atom is existential local to that atom unless
    // it also occurs elsewhere in the body; outside variables must be bound
    // before the check runs. Comparison variables must all be bound.
    std::map<std::string, int> occurrences;
    for (const BodyLiteral& l : body) {
      for (const std::string& v : literal_vars(l)) ++occurrences[v];
    }
    for (Check& ch : checks_) {
      std::vector<std::string> own_list = literal_vars(*ch.lit);
      std::map<std::string, int> own;
      for (const std::string& v : own_list) ++own[v];
      std::sort(own_list.begin(), own_list.end());
      own_list.erase(std::unique(own_list.begin(), own_list.end()), own_list.end());
      if (ch.lit->kind == BodyLiteral::Kind::Cmp) {
        ch.required = std::move(own_list);
      } else {
        for (const std::string& v : own_list) {
          if (occurrences[v] > own[v]) ch.required.push_back(v);
        }
      }
    }
    used_.assign(positives_.size(), false);
  }

  // Reusable across seeds; the lazy indexes survive, per-run state resets.
  void run(const Binding& seed, const std::function<bool(const Match&)>& cb) {
    cb_ = &cb;
    binding_ = seed;
    support_.clear();
    stopped_ = false;
    recurse();
  }

 private:
  struct Check {
    const BodyLiteral* lit;
    std::vector<std::string> required;
    bool done;
  };

  struct Undo {
    std::vector<std::string> bound;
    std::vector<FactIndex> supported;
    std::vector<std::size_t> checks_done;
  };

  static std::vector<std::string> literal_vars(const BodyLiteral& l) {
    std::vector<std::string> out;
    auto add_terms = [&](const std::vector<Term>& ts) {
      for (const Term& t : ts) {
        if (t.is_var) out.push_back(t.var);
      }
    };
    switch (l.kind) {
      case BodyLiteral::Kind::Atom:
      case BodyLiteral::Kind::NegAtom: add_terms(l.atom.args); break;
      case BodyLiteral::Kind::Binding:
        out.push_back(l.binding.var);
        if (l.binding.pred.is_var) out.push_back(pred_var_key(l.binding.pred.name));
        add_terms(l.binding.args);
        break;
      case BodyLiteral::Kind::Sub:
        if (l.sub.sub.is_var) out.push_back(pred_var_key(l.sub.sub.name));
        if (l.sub.sup.is_var) out.push_back(pred_var_key(l.sub.sup.name));
        break;
      case BodyLiteral::Kind::Cmp:
        if (l.cmp.lhs.is_var) out.push_back(l.cmp.lhs.var);
        if (l.cmp.rhs.is_var) out.push_back(l.cmp.rhs.var);
        break;
    }
    return out;
  }

  const Value* lookup(const std::string& var) const {
    auto it = binding_.find(var);
    return it == binding_.end() ? nullptr : &it->second;
  }

  bool bind(const std::string& var, const Value& v, Undo& undo) {
    auto [it, inserted] = binding_.emplace(var, v);
    if (inserted) {
      undo.bound.push_back(var);
      return true;
    }
    return it->second == v;
  }

  void apply_undo(const Undo& undo) {
    for (const std::string& v : undo.bound) binding_.erase(v);
    for (FactIndex f : undo.supported) {
      auto it = support_.find(f);
      if (--it->second == 0) support_.erase(it);
    }
    for (std::size_t i : undo.checks_done) checks_[i].done = false;
  }

  std::optional<Value> term_value(const Term& t) const {
    if (!t.is_var) return Value::make_const(t.c);
    const Value* v = lookup(t.var);
    if (!v) return std::nullopt;
    return *v;
  }

  // ---- candidate enumeration ----

  std::vector<FactIndex> data_candidates(const BodyAtom& atom) {
    for (std::size_t pos = 0; pos < atom.args.size(); ++pos) {
      auto v = term_value(atom.args[pos]);
      if (!v) continue;
      if (v->kind != Value::Kind::Const) return {};  // dataset arguments are constants
      auto& by_key = data_index_[{atom.pred, pos}];
      if (!by_key.built) {
        for (FactIndex f : ctx_.data.of_pred(atom.pred)) {
          if (pos < ctx_.data.fact(f).args.size()) by_key.map[const_key(ctx_.data.fact(f).args[pos])].push_back(f);
        }
        by_key.built = true;
      }
      auto it = by_key.map.find(const_key(v->c));
      return it == by_key.map.end() ? std::vector<FactIndex>{} : it->second;
    }
    return ctx_.data.of_pred(atom.pred);
  }

  std::vector<std::uint32_t> meta_candidates(const BodyAtom& atom) {
    for (std::size_t pos = 0; pos < atom.args.size(); ++pos) {
      auto v = term_value(atom.args[pos]);
      if (!v) continue;
      if (v->kind == Value::Kind::Pred) return {};
      auto& by_key = meta_index_[{atom.pred, pos}];
      if (!by_key.built) {
        for (std::uint32_t f : ctx_.meta.of_pred(atom.pred)) {
          const MetaFact& mf = ctx_.meta.fact(f);
          if (pos < mf.args.size()) by_key.map[meta_key(mf.args[pos])].push_back(f);
        }
        by_key.built = true;
      }
      std::string key = v->kind == Value::Kind::Id ? "r:" + std::to_string(v->id) : const_key(v->c);
      auto it = by_key.map.find(key);
      return it == by_key.map.end() ? std::vector<std::uint32_t>{} : it->second;
    }
    return ctx_.meta.of_pred(atom.pred);
  }

  bool unify_data(FactIndex f, const BodyAtom& atom, Undo& undo) {
    const Fact& fact = ctx_.data.fact(f);
    if (fact.args.size() != atom.args.size()) return false;
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      const Term& t = atom.args[i];
      if (!t.is_var) {
        if (!(t.c == fact.args[i])) return false;
      } else if (!bind(t.var, Value::make_const(fact.args[i]), undo)) {
        return false;
      }
    }
    return true;
  }

  bool unify_meta(std::uint32_t f, const BodyAtom& atom, Undo& undo) {
    const MetaFact& fact = ctx_.meta.fact(f);
    if (fact.args.size() != atom.args.size()) return false;
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      const Term& t = atom.args[i];
      const MetaValue& mv = fact.args[i];
      Value v = mv.kind == MetaValue::Kind::Ref ? Value::make_id(mv.ref) : Value::make_const(mv.c);
      if (!t.is_var) {
        if (!(Value::make_const(t.c) == v)) return false;
      } else if (!bind(t.var, v, undo)) {
        return false;
      }
    }
    return true;
  }

  bool atom_is_meta(const std::string& pred) const { return ctx_.meta.signature_of(pred) != nullptr; }

  // True if some fact matches the atom under the current binding; unbound
  // variables are existential.
  bool atom_exists(const BodyAtom& atom) {
    bool exists = false;
    if (atom_is_meta(atom.pred)) {
      for (std::uint32_t f : meta_candidates(atom)) {
        Undo undo;
        exists = unify_meta(f, atom, undo);
        apply_undo(undo);
        if (exists) break;
      }
    } else {
      for (FactIndex f : data_candidates(atom)) {
        Undo undo;
        exists = unify_data(f, atom, undo);
        apply_undo(undo);
        if (exists) break;
      }
    }
    return exists;
  }

  // ---- checks ----

  bool check_ready(const Check& ch) const {
    for (const std::string& v : ch.required) {
      if (!lookup(v)) return false;
    }
    return true;
  }

  bool eval_check(const Check& ch) {
    const BodyLiteral& l = *ch.lit;
    if (l.kind == BodyLiteral::Kind::Cmp) {
      auto a = term_value(l.cmp.lhs);
      auto b = term_value(l.cmp.rhs);
      if (!a || !b) return false;
      return eval_comparison(l.cmp.op, *a, *b);
    }
    return !atom_exists(l.atom);
  }

  // Runs every pending check whose outside variables are bound. Returns
  // false on a failed check; marks are recorded in undo either way.
  bool flush_checks(Undo& undo) {
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      Check& ch = checks_[i];
      if (ch.done || !check_ready(ch)) continue;
      ch.done = true;
      undo.checks_done.push_back(i);
      if (!eval_check(ch)) return false;
    }
    return true;
  }

  // ---- positive literal expansion ----

  int literal_score(const BodyLiteral& l) const {
    int score = 0;
    auto term_bonus = [&](const Term& t) {
      if (!t.is_var || lookup(t.var)) ++score;
    };
    switch (l.kind) {
      case BodyLiteral::Kind::Atom:
        for (const Term& t : l.atom.args) term_bonus(t);
        break;
      case BodyLiteral::Kind::Binding:
        if (lookup(l.binding.var)) score += 2;  // direct identifier lookup
        if (!l.binding.pred.is_var || lookup(pred_var_key(l.binding.pred.name))) ++score;
        for (const Term& t : l.binding.args) term_bonus(t);
        break;
      case BodyLiteral::Kind::Sub:
        if (!l.sub.sub.is_var || lookup(pred_var_key(l.sub.sub.name))) ++score;
        if (!l.sub.sup.is_var || lookup(pred_var_key(l.sub.sup.name))) ++score;
        break;
      default: break;
    }
    return score;
  }

  void expand_atom(const BodyAtom& atom, bool with_support) {
    if (atom_is_meta(atom.pred)) {
      for (std::uint32_t f : meta_candidates(atom)) {
        Undo undo;
        if (unify_meta(f, atom, undo)) recurse();
        apply_undo(undo);
        if (stopped_) return;
      }
      return;
    }
    for (FactIndex f : data_candidates(atom)) {
      Undo undo;
      bool ok = unify_data(f, atom, undo);
      if (ok && with_support) {
        ++support_[f];
        undo.supported.push_back(f);
      }
      if (ok) recurse();
      apply_undo(undo);
      if (stopped_) return;
    }
  }

  void expand_binding(const IdBinding& b) {
    // Bound target: direct lookup of the identified fact.
    if (const Value* v = lookup(b.var)) {
      if (v->kind != Value::Kind::Id) return;
      FactIndex f = v->id;
      const Fact& fact = ctx_.data.fact(f);
      Undo undo;
      bool ok = true;
      if (b.pred.is_var) {
        ok = bind(pred_var_key(b.pred.name), Value::make_pred(fact.pred), undo);
      } else {
        ok = fact.pred == b.pred.name;
      }
      BodyAtom shim{fact.pred, b.args};
      if (ok && unify_data(f, shim, undo)) recurse();
      apply_undo(undo);
      return;
    }
    auto try_pred = [&](const std::string& pred) {
      BodyAtom shim{pred, b.args};
      for (FactIndex f : data_candidates(shim)) {
        Undo undo;
        bool ok = bind(b.var, Value::make_id(f), undo);
        if (ok && b.pred.is_var) ok = bind(pred_var_key(b.pred.name), Value::make_pred(pred), undo);
        if (ok && unify_data(f, shim, undo)) recurse();
        apply_undo(undo);
        if (stopped_) return;
      }
    };
    if (!b.pred.is_var) {
      try_pred(b.pred.name);
      return;
    }
    if (const Value* pv = lookup(pred_var_key(b.pred.name))) {
      if (pv->kind == Value::Kind::Pred) try_pred(pv->pred);
      return;
    }
    for (const std::string& pred : ctx_.tax.predicates()) {
      try_pred(pred);
      if (stopped_) return;
    }
  }

  void expand_sub(const SubAtom& s) {
    auto known = [&](const PredTerm& p, bool& conflict) -> std::optional<std::string> {
      conflict = false;
      if (!p.is_var) return p.name;
      const Value* v = lookup(pred_var_key(p.name));
      if (!v) return std::nullopt;
      if (v->kind != Value::Kind::Pred) {
        conflict = true;
        return std::nullopt;
      }
      return v->pred;
    };
    auto try_pair = [&](const std::string& sub, const std::string& sup) {
      if (!ctx_.tax.holds(sub, sup)) return;
      Undo undo;
      bool ok = true;
      if (s.sub.is_var) ok = bind(pred_var_key(s.sub.name), Value::make_pred(sub), undo);
      if (ok && s.sup.is_var) ok = bind(pred_var_key(s.sup.name), Value::make_pred(sup), undo);
      if (ok) recurse();
      apply_undo(undo);
    };
    bool conflict_sub = false;
    bool conflict_sup = false;
    std::optional<std::string> sub = known(s.sub, conflict_sub);
    std::optional<std::string> sup = known(s.sup, conflict_sup);
    if (conflict_sub || conflict_sup) return;
    if (sub && sup) {
      try_pair(*sub, *sup);
      return;
    }
    const std::vector<std::string>& preds = ctx_.tax.predicates();
    if (sub) {
      for (const std::string& q : preds) {
        try_pair(*sub, q);
        if (stopped_) return;
      }
      return;
    }
    if (sup) {
      for (const std::string& p : preds) {
        try_pair(p, *sup);
        if (stopped_) return;
      }
      return;
    }
    for (const std::string& p : preds) {
      for (const std::string& q : preds) {
        try_pair(p, q);
        if (stopped_) return;
      }
    }
  }

  void recurse() {
    if (stopped_) return;
    Undo undo;
    if (!flush_checks(undo)) {
      apply_undo(undo);
      return;
    }
    std::size_t best = positives_.size();
    int best_score = -1;
    for (std::size_t i = 0; i < positives_.size(); ++i) {
      if (used_[i]) continue;
      int score = literal_score(*positives_[i]);
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    if (best == positives_.size()) {
      bool all_done = true;
      for (const Check& ch : checks_) all_done = all_done && ch.done;
      if (all_done) {
        Match m;
        m.binding = binding_;
        m.support.reserve(support_.size());
        for (const auto& kv : support_) m.support.push_back(kv.first);
        if (!(*cb_)(m)) stopped_ = true;
      }
      apply_undo(undo);
      return;
    }
    used_[best] = true;
    const BodyLiteral& l = *positives_[best];
    switch (l.kind) {
      case BodyLiteral::Kind::Atom: expand_atom(l.atom, true); break;
      case BodyLiteral::Kind::Binding: expand_binding(l.binding); break;
      case BodyLiteral::Kind::Sub: expand_sub(l.sub); break;
      default: break;
    }
    used_[best] = false;
    apply_undo(undo);
  }

  struct LazyIndex {
    bool built = false;
    std::unordered_map<std::string, std::vector<FactIndex>> map;
  };

  const MatchContext& ctx_;
  const std::function<bool(const Match&)>* cb_ = nullptr;
  std::vector<const BodyLiteral*> positives_;
  std::vector<Check> checks_;
  std::vector<bool> used_;
  Binding binding_;
  std::map<FactIndex, int> support_;
  bool stopped_ = false;
  std::map<std::pair<std::string, std::size_t>, LazyIndex> data_index_;
  std::map<std::pair<std::string, std::size_t>, LazyIndex> meta_index_;
};

}  // namespace

void match_body(const std::vector<BodyLiteral>& body, const MatchContext& ctx, const Binding& seed,
                const std::function<bool(const Match&)>& cb) {
  Evaluator ev(body, ctx);
  ev.run(seed, cb);
}

void match_each(const std::vector<BodyLiteral>& body, const MatchContext& ctx,
                const std::vector<Binding>& seeds,
                const std::function<bool(std::size_t, const Match&)>& cb) {
  Evaluator ev(body, ctx);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    ev.run(seeds[i], [&](const Match& m) { return cb(i, m); });
  }
}

std::vector<Match> match_all(const std::vector<BodyLiteral>& body, const MatchContext& ctx, const Binding& seed) {
  std::vector<Match> out;
  match_body(body, ctx, seed, [&](const Match& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<BodyLiteral> atoms_as_body(const std::vector<BodyAtom>& atoms) {
  std::vector<BodyLiteral> out;
  out.reserve(atoms.size());
  for (const BodyAtom& a : atoms) {
    BodyLiteral l;
    l.kind = BodyLiteral::Kind::Atom;
    l.atom = a;
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace priorepair
