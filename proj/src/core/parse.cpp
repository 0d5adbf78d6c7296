#include "core/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace priorepair {
namespace {

bool is_token_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

bool is_reserved_word(const std::string& t) {
  return t == "not" || t == "sub" || t == "id" || t == "pref" || t == "level" || t == "bot";
}

[[noreturn]] void fail(int line, int col, std::string msg) {
  throw ParseError({Diagnostic::Severity::Error, line, col, std::move(msg)});
}

struct Tok {
  enum class Type { Ident, Int, PredVar, Ref, Punct, End };
  Type type = Type::End;
  std::string text;  // raw token; PredVar/Ref without the sigil
  std::int64_t num = 0;
  int col = 1;
};

// Tokenizes one physical line. `meta_refs` enables `#id` fact references
// inside parentheses; everywhere else `#` starts a comment.
std::vector<Tok> lex_line(const std::string& line, int line_no, bool meta_refs) {
  std::vector<Tok> out;
  int depth = 0;
  std::size_t i = 0;
  auto push = [&](Tok::Type t, std::string text, std::size_t col, std::int64_t num = 0) {
    out.push_back({t, std::move(text), num, static_cast<int>(col) + 1});
  };
  auto read_token = [&](std::size_t j) {
    std::size_t k = j;
    while (k < line.size() && is_token_char(static_cast<unsigned char>(line[k]))) ++k;
    return k;
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      if (meta_refs && depth > 0 && i + 1 < line.size() && is_token_char(static_cast<unsigned char>(line[i + 1]))) {
        std::size_t j = read_token(i + 1);
        push(Tok::Type::Ref, line.substr(i + 1, j - i - 1), i);
        i = j;
        continue;
      }
      break;
    }
    if (c == '%') {
      if (i + 1 >= line.size() || !is_token_char(static_cast<unsigned char>(line[i + 1]))) {
        fail(line_no, static_cast<int>(i) + 1, "expected a name after '%'");
      }
      std::size_t j = read_token(i + 1);
      push(Tok::Type::PredVar, line.substr(i + 1, j - i - 1), i);
      i = j;
      continue;
    }
    if (c == '(' || c == ')' || c == ',' || c == '|' || c == '[' || c == ']') {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      push(Tok::Type::Punct, std::string(1, c), i);
      ++i;
      continue;
    }
    if (c == '-') {
      if (i + 1 < line.size() && line[i + 1] == '>') {
        push(Tok::Type::Punct, "->", i);
        i += 2;
        continue;
      }
      if (i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1]))) {
        std::size_t j = read_token(i + 1);
        std::string raw = line.substr(i, j - i);
        auto v = parse_integer_token(raw);
        if (!v) fail(line_no, static_cast<int>(i) + 1, "malformed or out-of-range integer '" + raw + "'");
        push(Tok::Type::Int, std::move(raw), i, *v);
        i = j;
        continue;
      }
      fail(line_no, static_cast<int>(i) + 1, "unexpected '-'");
    }
    if (c == '<') {
      if (i + 1 < line.size() && line[i + 1] == '-') {
        push(Tok::Type::Punct, "<-", i);
        i += 2;
        continue;
      }
      if (i + 1 < line.size() && line[i + 1] == '=') {
        push(Tok::Type::Punct, "<=", i);
        i += 2;
        continue;
      }
      push(Tok::Type::Punct, "<", i);
      ++i;
      continue;
    }
    if (c == '>') {
      if (i + 1 < line.size() && line[i + 1] == '=') {
        push(Tok::Type::Punct, ">=", i);
        i += 2;
        continue;
      }
      push(Tok::Type::Punct, ">", i);
      ++i;
      continue;
    }
    if (c == '!') {
      if (i + 1 < line.size() && line[i + 1] == '=') {
        push(Tok::Type::Punct, "!=", i);
        i += 2;
        continue;
      }
      fail(line_no, static_cast<int>(i) + 1, "expected '=' after '!'");
    }
    if (c == '=') {
      push(Tok::Type::Punct, "=", i);
      ++i;
      continue;
    }
    if (is_token_char(static_cast<unsigned char>(c))) {
      std::size_t j = read_token(i);
      std::string raw = line.substr(i, j - i);
      if (std::isdigit(static_cast<unsigned char>(c))) {
        bool all_digits = std::all_of(raw.begin(), raw.end(), [](unsigned char ch) { return std::isdigit(ch); });
        if (all_digits) {
          auto v = parse_integer_token(raw);
          if (!v) fail(line_no, static_cast<int>(i) + 1, "integer out of range '" + raw + "'");
          push(Tok::Type::Int, std::move(raw), i, *v);
          i = j;
          continue;
        }
      }
      push(Tok::Type::Ident, std::move(raw), i);
      i = j;
      continue;
    }
    fail(line_no, static_cast<int>(i) + 1, std::string("unexpected character '") + c + "'");
  }
  push(Tok::Type::End, "", i);
  return out;
}

struct Cursor {
  std::vector<Tok> toks;
  std::size_t pos = 0;
  int line = 0;

  const Tok& peek(std::size_t k = 0) const {
    std::size_t i = pos + k;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Tok take() {
    const Tok& t = peek();
    if (t.type != Tok::Type::End) ++pos;
    return t;
  }
  bool at_punct(const char* text, std::size_t k = 0) const {
    const Tok& t = peek(k);
    return t.type == Tok::Type::Punct && t.text == text;
  }
  bool at_ident(const char* text, std::size_t k = 0) const {
    const Tok& t = peek(k);
    return t.type == Tok::Type::Ident && t.text == text;
  }
  void expect_punct(const char* text) {
    const Tok& t = peek();
    if (!at_punct(text)) fail(line, t.col, std::string("expected '") + text + "'");
    ++pos;
  }
  void expect_end() {
    const Tok& t = peek();
    if (t.type != Tok::Type::End) fail(line, t.col, "unexpected trailing input '" + t.text + "'");
  }
  [[noreturn]] void error(std::string msg) const { fail(line, peek().col, std::move(msg)); }
};

// Splits into (line_no, tokens) for non-blank lines.
std::vector<Cursor> lex_text(const std::string& text, bool meta_refs) {
  std::vector<Cursor> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    ++line_no;
    std::vector<Tok> toks = lex_line(line, line_no, meta_refs);
    if (toks.size() > 1) out.push_back({std::move(toks), 0, line_no});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

struct AnonCounter {
  int next = 0;
  std::string fresh() { return "_" + std::to_string(++next); }
};

bool is_anon(const std::string& tok) { return tok == "_"; }

Constant parse_constant(Cursor& cur, bool allow_reserved) {
  const Tok& t = cur.peek();
  if (t.type == Tok::Type::Int) {
    cur.take();
    return Constant::integer(t.num);
  }
  if (t.type == Tok::Type::Ident) {
    if (is_anon(t.text)) cur.error("anonymous term not allowed in a fact");
    if (!allow_reserved && is_reserved_word(t.text)) cur.error("reserved word '" + t.text + "'");
    cur.take();
    return Constant::symbol(t.text);
  }
  cur.error("expected a constant");
}

Term parse_term(Cursor& cur, AnonCounter& anon) {
  const Tok& t = cur.peek();
  if (t.type == Tok::Type::Int) {
    cur.take();
    return Term::make_const(Constant::integer(t.num));
  }
  if (t.type == Tok::Type::Ident) {
    if (is_anon(t.text)) {
      cur.take();
      return Term::make_var(anon.fresh());
    }
    if (is_reserved_word(t.text)) cur.error("reserved word '" + t.text + "'");
    cur.take();
    if (is_variable_name(t.text)) return Term::make_var(t.text);
    return Term::make_const(Constant::symbol(t.text));
  }
  cur.error("expected a term");
}

std::vector<Term> parse_term_list(Cursor& cur, AnonCounter& anon) {
  std::vector<Term> out;
  cur.expect_punct("(");
  if (!cur.at_punct(")")) {
    out.push_back(parse_term(cur, anon));
    while (cur.at_punct(",")) {
      cur.take();
      out.push_back(parse_term(cur, anon));
    }
  }
  cur.expect_punct(")");
  return out;
}

std::string parse_predicate_name(Cursor& cur) {
  const Tok& t = cur.peek();
  if (t.type != Tok::Type::Ident || !is_predicate_name(t.text)) {
    cur.error("expected a predicate name (uppercase first letter)");
  }
  cur.take();
  return t.text;
}

PredTerm parse_pred_term(Cursor& cur) {
  const Tok& t = cur.peek();
  if (t.type == Tok::Type::PredVar) {
    cur.take();
    return {true, t.text};
  }
  return {false, parse_predicate_name(cur)};
}

BodyAtom parse_body_atom(Cursor& cur, AnonCounter& anon) {
  BodyAtom atom;
  atom.pred = parse_predicate_name(cur);
  atom.args = parse_term_list(cur, anon);
  return atom;
}

CmpOp parse_cmp_op(Cursor& cur) {
  const Tok& t = cur.peek();
  if (t.type == Tok::Type::Punct) {
    if (t.text == "=") return cur.take(), CmpOp::Eq;
    if (t.text == "!=") return cur.take(), CmpOp::Ne;
    if (t.text == "<") return cur.take(), CmpOp::Lt;
    if (t.text == "<=") return cur.take(), CmpOp::Le;
    if (t.text == ">") return cur.take(), CmpOp::Gt;
    if (t.text == ">=") return cur.take(), CmpOp::Ge;
  }
  cur.error("expected a comparison operator");
}

// ---------------------------------------------------------------------------
// Serialization helpers
// ---------------------------------------------------------------------------

std::string term_text(const Term& t) {
  if (t.is_var) return t.var[0] == '_' ? "_" : t.var;
  return t.c.lexeme();
}

std::string pred_term_text(const PredTerm& p) { return p.is_var ? "%" + p.name : p.name; }

std::string atom_text(const BodyAtom& a) {
  std::string out = a.pred + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ", ";
    out += term_text(a.args[i]);
  }
  return out + ")";
}

std::string cmp_text(const Comparison& c) {
  return term_text(c.lhs) + " " + cmp_op_text(c.op) + " " + term_text(c.rhs);
}

}  // namespace

bool is_variable_name(const std::string& tok) {
  if (tok.empty() || tok[0] < 'u' || tok[0] > 'z') return false;
  return std::all_of(tok.begin() + 1, tok.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_predicate_name(const std::string& tok) { return !tok.empty() && tok[0] >= 'A' && tok[0] <= 'Z'; }

// ---------------------------------------------------------------------------
// Dataset
// ---------------------------------------------------------------------------

Dataset parse_dataset(const std::string& text) {
  Dataset data;
  for (Cursor& cur : lex_text(text, false)) {
    const Tok& idt = cur.peek();
    if (idt.type != Tok::Type::Ident && idt.type != Tok::Type::Int) cur.error("expected a fact identifier");
    std::string id = idt.text;
    cur.take();
    cur.expect_punct("|");
    Fact fact;
    fact.pred = parse_predicate_name(cur);
    cur.expect_punct("(");
    if (!cur.at_punct(")")) {
      fact.args.push_back(parse_constant(cur, true));
      while (cur.at_punct(",")) {
        cur.take();
        fact.args.push_back(parse_constant(cur, true));
      }
    }
    cur.expect_punct(")");
    cur.expect_end();
    if (data.find_id(id)) fail(cur.line, idt.col, "duplicate identifier '" + id + "'");
    if (auto arity = data.arity_of(fact.pred); arity && *arity != fact.args.size()) {
      fail(cur.line, idt.col,
           "arity clash for predicate '" + fact.pred + "': expected " + std::to_string(*arity) + " arguments, got " +
               std::to_string(fact.args.size()));
    }
    if (auto prev = data.find_fact(fact)) {
      fail(cur.line, idt.col, "identifiers '" + data.id(*prev) + "' and '" + id + "' name the same fact");
    }
    data.add(std::move(id), std::move(fact));
  }
  return data;
}

std::string serialize_dataset(const Dataset& data) {
  std::string out;
  for (FactIndex i = 0; i < data.size(); ++i) {
    const Fact& f = data.fact(i);
    out += data.id(i) + " | " + f.pred + "(";
    for (std::size_t j = 0; j < f.args.size(); ++j) {
      if (j) out += ", ";
      out += f.args[j].lexeme();
    }
    out += ")\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Meta database
// ---------------------------------------------------------------------------

MetaDatabase parse_meta(const std::string& text, const Dataset& data) {
  MetaDatabase meta;
  for (Cursor& cur : lex_text(text, true)) {
    const Tok& head = cur.peek();
    MetaFact fact;
    fact.pred = parse_predicate_name(cur);
    if (data.arity_of(fact.pred)) {
      fail(cur.line, head.col, "predicate '" + fact.pred + "' already names dataset facts");
    }
    cur.expect_punct("(");
    if (!cur.at_punct(")")) {
      while (true) {
        const Tok& t = cur.peek();
        if (t.type == Tok::Type::Ref) {
          auto idx = data.find_id(t.text);
          if (!idx) fail(cur.line, t.col, "unknown fact identifier '#" + t.text + "'");
          fact.args.push_back(MetaValue::make_ref(*idx));
          cur.take();
        } else {
          fact.args.push_back(MetaValue::make_const(parse_constant(cur, true)));
        }
        if (!cur.at_punct(",")) break;
        cur.take();
      }
    }
    cur.expect_punct(")");
    cur.expect_end();
    if (const MetaDatabase::Signature* sig = meta.signature_of(fact.pred)) {
      MetaDatabase::Signature got = MetaDatabase::signature_for(fact);
      if (got.arity != sig->arity || got.id_positions != sig->id_positions) {
        fail(cur.line, head.col, "inconsistent identifier positions for predicate '" + fact.pred + "'");
      }
    }
    meta.add(std::move(fact));
  }
  return meta;
}

std::string serialize_meta(const MetaDatabase& meta, const Dataset& data) {
  std::string out;
  for (std::size_t i = 0; i < meta.size(); ++i) {
    const MetaFact& f = meta.fact(i);
    out += f.pred + "(";
    for (std::size_t j = 0; j < f.args.size(); ++j) {
      if (j) out += ", ";
      const MetaValue& v = f.args[j];
      out += v.kind == MetaValue::Kind::Ref ? "#" + data.id(v.ref) : v.c.lexeme();
    }
    out += ")\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Denial constraints
// ---------------------------------------------------------------------------

std::vector<DenialConstraint> parse_constraints(const std::string& text) {
  std::vector<DenialConstraint> out;
  for (Cursor& cur : lex_text(text, false)) {
    AnonCounter anon;
    DenialConstraint dc;
    bool in_neqs = false;
    while (true) {
      const Tok& t = cur.peek();
      if (t.type == Tok::Type::Ident && is_predicate_name(t.text) && cur.at_punct("(", 1)) {
        if (in_neqs) cur.error("relational atom after a disequality");
        dc.atoms.push_back(parse_body_atom(cur, anon));
      } else {
        in_neqs = true;
        Comparison cmp;
        const Tok& lhs = cur.peek();
        cmp.lhs = parse_term(cur, anon);
        if (!cmp.lhs.is_var) fail(cur.line, lhs.col, "left-hand side of != must be a variable");
        CmpOp op = parse_cmp_op(cur);
        if (op != CmpOp::Ne) cur.error("only != is allowed in a constraint");
        cmp.op = CmpOp::Ne;
        cmp.rhs = parse_term(cur, anon);
        dc.neqs.push_back(std::move(cmp));
      }
      if (cur.at_punct(",")) {
        cur.take();
        continue;
      }
      break;
    }
    cur.expect_punct("->");
    if (!cur.at_ident("bot")) cur.error("expected 'bot'");
    cur.take();
    cur.expect_end();
    if (dc.atoms.empty()) fail(cur.line, 1, "constraint needs at least one relational atom");
    std::set<std::string> atom_vars;
    for (const BodyAtom& a : dc.atoms) {
      for (const Term& t : a.args) {
        if (t.is_var) atom_vars.insert(t.var);
      }
    }
    for (const Comparison& c : dc.neqs) {
      for (const Term* t : {&c.lhs, &c.rhs}) {
        if (t->is_var && !atom_vars.count(t->var)) {
          fail(cur.line, 1, "unsafe variable '" + (t->var[0] == '_' ? "_" : t->var) + "' in constraint");
        }
      }
    }
    out.push_back(std::move(dc));
  }
  return out;
}

std::string serialize_constraints(const std::vector<DenialConstraint>& dcs) {
  std::string out;
  for (const DenialConstraint& dc : dcs) {
    std::string line;
    for (std::size_t i = 0; i < dc.atoms.size(); ++i) {
      if (i) line += ", ";
      line += atom_text(dc.atoms[i]);
    }
    for (const Comparison& c : dc.neqs) line += ", " + cmp_text(c);
    out += line + " -> bot\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Query rewritings
// ---------------------------------------------------------------------------

std::vector<QueryRewriting> parse_queries(const std::string& text) {
  std::vector<QueryRewriting> out;
  std::map<std::string, std::size_t> by_name;
  for (Cursor& cur : lex_text(text, false)) {
    AnonCounter anon;
    const Tok& name_tok = cur.peek();
    if (name_tok.type != Tok::Type::Ident || is_reserved_word(name_tok.text)) cur.error("expected a query name");
    std::string name = name_tok.text;
    cur.take();
    QueryRewriting::CQ body;
    cur.expect_punct("(");
    if (!cur.at_punct(")")) {
      while (true) {
        const Tok& t = cur.peek();
        if (t.type != Tok::Type::Ident || !is_variable_name(t.text)) cur.error("answer position must be a variable");
        if (std::find(body.answer_vars.begin(), body.answer_vars.end(), t.text) != body.answer_vars.end()) {
          fail(cur.line, t.col, "repeated answer variable '" + t.text + "'");
        }
        body.answer_vars.push_back(t.text);
        cur.take();
        if (!cur.at_punct(",")) break;
        cur.take();
      }
    }
    cur.expect_punct(")");
    cur.expect_punct("<-");
    body.atoms.push_back(parse_body_atom(cur, anon));
    while (cur.at_punct(",")) {
      cur.take();
      body.atoms.push_back(parse_body_atom(cur, anon));
    }
    cur.expect_end();
    std::set<std::string> body_vars;
    for (const BodyAtom& a : body.atoms) {
      for (const Term& t : a.args) {
        if (t.is_var) body_vars.insert(t.var);
      }
    }
    for (const std::string& v : body.answer_vars) {
      if (!body_vars.count(v)) fail(cur.line, name_tok.col, "answer variable '" + v + "' not bound by the body");
    }
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      by_name.emplace(name, out.size());
      out.push_back({std::move(name), {std::move(body)}});
    } else {
      QueryRewriting& q = out[it->second];
      if (q.bodies.front().answer_vars.size() != body.answer_vars.size()) {
        fail(cur.line, name_tok.col, "answer arity mismatch for query '" + name + "'");
      }
      q.bodies.push_back(std::move(body));
    }
  }
  return out;
}

std::string serialize_queries(const std::vector<QueryRewriting>& queries) {
  std::string out;
  for (const QueryRewriting& q : queries) {
    for (const QueryRewriting::CQ& body : q.bodies) {
      std::string line = q.name + "(";
      for (std::size_t i = 0; i < body.answer_vars.size(); ++i) {
        if (i) line += ", ";
        line += body.answer_vars[i];
      }
      line += ") <- ";
      for (std::size_t i = 0; i < body.atoms.size(); ++i) {
        if (i) line += ", ";
        line += atom_text(body.atoms[i]);
      }
      out += line + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Preference rules
// ---------------------------------------------------------------------------

namespace {

BodyLiteral parse_rule_literal(Cursor& cur, AnonCounter& anon) {
  BodyLiteral lit;
  if (cur.at_ident("not")) {
    cur.take();
    const Tok& t = cur.peek();
    if (t.type == Tok::Type::PredVar) cur.error("predicate variable cannot head an atom");
    if (t.type != Tok::Type::Ident || !is_predicate_name(t.text)) {
      cur.error("negation applies to relational atoms only");
    }
    lit.kind = BodyLiteral::Kind::NegAtom;
    lit.atom = parse_body_atom(cur, anon);
    return lit;
  }
  if (cur.at_ident("sub") && cur.at_punct("(", 1)) {
    cur.take();
    cur.expect_punct("(");
    lit.kind = BodyLiteral::Kind::Sub;
    lit.sub.sub = parse_pred_term(cur);
    cur.expect_punct(",");
    lit.sub.sup = parse_pred_term(cur);
    cur.expect_punct(")");
    return lit;
  }
  const Tok& t0 = cur.peek();
  if (t0.type == Tok::Type::PredVar) cur.error("predicate variable cannot head an atom");
  if (t0.type == Tok::Type::Ident && is_predicate_name(t0.text) && cur.at_punct("(", 1)) {
    lit.kind = BodyLiteral::Kind::Atom;
    lit.atom = parse_body_atom(cur, anon);
    return lit;
  }
  Term lhs = parse_term(cur, anon);
  CmpOp op = parse_cmp_op(cur);
  if (op == CmpOp::Eq && cur.at_ident("id") && cur.at_punct("[", 1)) {
    if (!lhs.is_var) fail(cur.line, t0.col, "binding target must be a variable");
    cur.take();
    cur.expect_punct("[");
    lit.kind = BodyLiteral::Kind::Binding;
    lit.binding.var = lhs.var;
    lit.binding.pred = parse_pred_term(cur);
    lit.binding.args = parse_term_list(cur, anon);
    cur.expect_punct("]");
    return lit;
  }
  lit.kind = BodyLiteral::Kind::Cmp;
  lit.cmp.op = op;
  lit.cmp.lhs = std::move(lhs);
  lit.cmp.rhs = parse_term(cur, anon);
  return lit;
}

}  // namespace

std::vector<PreferenceRule> parse_rules(const std::string& text) {
  std::vector<PreferenceRule> out;
  int level = 1;
  for (Cursor& cur : lex_text(text, false)) {
    if (cur.at_punct("[")) {
      cur.take();
      if (!cur.at_ident("level")) cur.error("expected 'level'");
      cur.take();
      const Tok& t = cur.peek();
      if (t.type != Tok::Type::Int || t.num < 1) cur.error("level must be an integer >= 1");
      level = static_cast<int>(t.num);
      cur.take();
      cur.expect_punct("]");
      cur.expect_end();
      continue;
    }
    AnonCounter anon;
    PreferenceRule rule;
    rule.level = level;
    rule.line = cur.line;
    if (!cur.at_ident("pref")) cur.error("expected 'pref' or a '[level k]' header");
    cur.take();
    cur.expect_punct("(");
    for (std::string* v : {&rule.v1, &rule.v2}) {
      const Tok& t = cur.peek();
      if (t.type != Tok::Type::Ident || (!is_variable_name(t.text) && !is_anon(t.text))) {
        cur.error("head position must be a variable");
      }
      *v = is_anon(t.text) ? anon.fresh() : t.text;
      cur.take();
      if (v == &rule.v1) cur.expect_punct(",");
    }
    cur.expect_punct(")");
    if (rule.v1 == rule.v2) fail(cur.line, 1, "head variables must be distinct");
    cur.expect_punct("<-");
    rule.body.push_back(parse_rule_literal(cur, anon));
    while (cur.at_punct(",")) {
      cur.take();
      rule.body.push_back(parse_rule_literal(cur, anon));
    }
    cur.expect_end();

    std::set<std::string> pos_vars;      // bound by positive atoms or bindings
    std::set<std::string> binding_lhs;   // bound to fact identifiers
    std::set<std::string> pos_atom_vars; // arguments of positive atoms
    for (const BodyLiteral& l : rule.body) {
      if (l.kind == BodyLiteral::Kind::Atom) {
        for (const Term& t : l.atom.args) {
          if (t.is_var) {
            pos_vars.insert(t.var);
            pos_atom_vars.insert(t.var);
          }
        }
      } else if (l.kind == BodyLiteral::Kind::Binding) {
        binding_lhs.insert(l.binding.var);
        pos_vars.insert(l.binding.var);
        for (const Term& t : l.binding.args) {
          if (t.is_var) pos_vars.insert(t.var);
        }
      }
    }
    for (const BodyLiteral& l : rule.body) {
      if (l.kind != BodyLiteral::Kind::Cmp) continue;
      for (const Term* t : {&l.cmp.lhs, &l.cmp.rhs}) {
        if (t->is_var && !pos_vars.count(t->var)) {
          fail(cur.line, 1, "unsafe variable '" + (t->var[0] == '_' ? "_" : t->var) + "' in comparison");
        }
      }
    }
    for (const std::string& v : {rule.v1, rule.v2}) {
      if (!binding_lhs.count(v) && !pos_atom_vars.count(v)) {
        fail(cur.line, 1, "unbound head variable '" + (v[0] == '_' ? "_" : v) + "'");
      }
    }
    out.push_back(std::move(rule));
  }
  return out;
}

std::string serialize_rules(const std::vector<PreferenceRule>& rules) {
  std::string out;
  int level = 0;
  for (const PreferenceRule& r : rules) {
    if (r.level != level) {
      level = r.level;
      out += "[level " + std::to_string(level) + "]\n";
    }
    std::string line = "pref(" + r.v1 + ", " + r.v2 + ") <- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) line += ", ";
      const BodyLiteral& l = r.body[i];
      switch (l.kind) {
        case BodyLiteral::Kind::Atom: line += atom_text(l.atom); break;
        case BodyLiteral::Kind::NegAtom: line += "not " + atom_text(l.atom); break;
        case BodyLiteral::Kind::Sub:
          line += "sub(" + pred_term_text(l.sub.sub) + ", " + pred_term_text(l.sub.sup) + ")";
          break;
        case BodyLiteral::Kind::Binding: {
          line += l.binding.var[0] == '_' ? "_" : l.binding.var;
          line += " = id[" + pred_term_text(l.binding.pred) + "(";
          for (std::size_t j = 0; j < l.binding.args.size(); ++j) {
            if (j) line += ", ";
            line += term_text(l.binding.args[j]);
          }
          line += ")]";
          break;
        }
        case BodyLiteral::Kind::Cmp: line += cmp_text(l.cmp); break;
      }
    }
    out += line + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Taxonomy
// ---------------------------------------------------------------------------

Taxonomy parse_taxonomy(const std::string& text) {
  Taxonomy tax;
  std::set<std::pair<std::string, std::string>> seen;
  for (Cursor& cur : lex_text(text, false)) {
    std::string sub = parse_predicate_name(cur);
    cur.expect_punct("<");
    std::string sup = parse_predicate_name(cur);
    cur.expect_end();
    if (seen.insert({sub, sup}).second) tax.edges.emplace_back(std::move(sub), std::move(sup));
  }
  return tax;
}

std::string serialize_taxonomy(const Taxonomy& tax) {
  std::string out;
  for (const auto& [sub, sup] : tax.edges) out += sub + " < " + sup + "\n";
  return out;
}

}  // namespace priorepair
