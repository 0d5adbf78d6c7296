#pragma once

// Minimal ASP-core syntax checker used to vet every emitted program: rules
// are `[head] [":-" body] "."` with atom / classically-negated atom / bounded
// choice heads, and bodies of (default-negated) atoms and comparisons. Terms
// cover constants, integers, variables, `_`, and parenthesized tuples.
// Checks syntax only; no grounding or safety analysis.

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

namespace aspcheck {

struct Token {
  std::string text;
  int line = 0;
};

enum class Tk { Ident, Var, Int, Punct, End };

inline Tk classify(const Token& t) {
  if (t.text.empty()) return Tk::End;
  unsigned char c0 = static_cast<unsigned char>(t.text[0]);
  if (std::isdigit(c0)) return Tk::Int;
  if (std::islower(c0)) return Tk::Ident;
  if (std::isupper(c0) || t.text[0] == '_') return Tk::Var;
  return Tk::Punct;
}

struct CheckResult {
  bool ok = true;
  std::string error;
};

class Checker {
 public:
  CheckResult run(const std::string& src) {
    toks_.clear();
    pos_ = 0;
    err_.clear();
    if (!tokenize(src)) return {false, err_};
    while (!at_end()) {
      if (!rule()) return {false, err_};
    }
    return {true, {}};
  }

 private:
  bool tokenize(const std::string& src) {
    int line = 1;
    std::size_t i = 0;
    auto word = [&](auto pred) {
      std::size_t b = i;
      while (i < src.size() && pred(static_cast<unsigned char>(src[i]))) ++i;
      return src.substr(b, i - b);
    };
    while (i < src.size()) {
      char ch = src[i];
      if (ch == '\n') {
        ++line;
        ++i;
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
      } else if (ch == '%') {
        while (i < src.size() && src[i] != '\n') ++i;
      } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
        toks_.push_back({word([](unsigned char c) { return std::isalnum(c) || c == '_'; }), line});
      } else if (ch == ':' && i + 1 < src.size() && src[i + 1] == '-') {
        toks_.push_back({":-", line});
        i += 2;
      } else if ((ch == '<' || ch == '>' || ch == '!') && i + 1 < src.size() && src[i + 1] == '=') {
        toks_.push_back({std::string(1, ch) + "=", line});
        i += 2;
      } else if (std::string("(){};,.<>=-:").find(ch) != std::string::npos) {
        toks_.push_back({std::string(1, ch), line});
        ++i;
      } else {
        err_ = "line " + std::to_string(line) + ": unexpected character '" + std::string(1, ch) + "'";
        return false;
      }
    }
    return true;
  }

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    static const Token kEnd{"", 0};
    return at_end() ? kEnd : toks_[pos_];
  }
  bool peek_is(const char* s) const { return peek().text == s; }
  bool accept(const char* s) {
    if (!peek_is(s)) return false;
    ++pos_;
    return true;
  }
  bool fail(const std::string& msg) {
    int line = at_end() ? (toks_.empty() ? 1 : toks_.back().line) : peek().line;
    err_ = "line " + std::to_string(line) + ": " + msg +
           (at_end() ? " (at end of input)" : " (at '" + peek().text + "')");
    return false;
  }
  bool expect(const char* s) {
    if (accept(s)) return true;
    return fail(std::string("expected '") + s + "'");
  }
  bool is_cmp_op() const {
    const std::string& t = peek().text;
    return t == "=" || t == "!=" || t == "<" || t == "<=" || t == ">" || t == ">=";
  }

  // rule := [head] [":-" body] "."
  bool rule() {
    bool any = false;
    if (!peek_is(":-") && !peek_is(".")) {
      if (!head()) return false;
      any = true;
    }
    if (accept(":-")) {
      if (!body()) return false;
      any = true;
    }
    if (!any) return fail("empty rule");
    return expect(".");
  }

  // head := choice | ["-"] atom
  bool head() {
    if (classify(peek()) == Tk::Int || peek_is("{")) return choice();
    if (accept("-")) return atom();
    return atom();
  }

  // choice := [int] "{" elem {";" elem} "}" [int]
  bool choice() {
    if (classify(peek()) == Tk::Int) ++pos_;
    if (!expect("{")) return false;
    do {
      if (!atom()) return false;
      if (accept(":")) {
        do {
          if (!literal()) return false;
        } while (accept(","));
      }
    } while (accept(";"));
    if (!expect("}")) return false;
    if (classify(peek()) == Tk::Int) ++pos_;
    return true;
  }

  bool body() {
    do {
      if (!literal()) return false;
    } while (accept(","));
    return true;
  }

  // literal := ["not"] (["-"] atom | term cmpop term)
  bool literal() {
    if (peek_is("not") ) ++pos_;
    if (accept("-")) return atom();
    bool atom_shaped = false;
    if (!primary(&atom_shaped)) return false;
    if (is_cmp_op()) {
      ++pos_;
      return term();
    }
    if (!atom_shaped) return fail("expected atom or comparison");
    return true;
  }

  // primary := atom-or-term; reports whether it could stand as an atom.
  bool primary(bool* atom_shaped) {
    *atom_shaped = false;
    switch (classify(peek())) {
      case Tk::Ident:
        *atom_shaped = true;
        return atom();
      case Tk::Var:
      case Tk::Int:
        ++pos_;
        return true;
      default:
        if (peek_is("(")) return tuple();
        if (peek_is("-")) {
          ++pos_;
          if (classify(peek()) != Tk::Int) return fail("expected integer after '-'");
          ++pos_;
          return true;
        }
        return fail("expected literal");
    }
  }

  // atom := ident ["(" term {"," term} ")"]
  bool atom() {
    if (classify(peek()) != Tk::Ident) return fail("expected predicate name");
    ++pos_;
    if (accept("(")) {
      if (accept(")")) return true;
      do {
        if (!term()) return false;
      } while (accept(","));
      return expect(")");
    }
    return true;
  }

  // term := ident ["(" terms ")"] | var | int | "-" int | tuple
  bool term() {
    switch (classify(peek())) {
      case Tk::Ident:
        return atom();  // constant or function term
      case Tk::Var:
      case Tk::Int:
        ++pos_;
        return true;
      default:
        if (peek_is("(")) return tuple();
        if (peek_is("-")) {
          ++pos_;
          if (classify(peek()) != Tk::Int) return fail("expected integer after '-'");
          ++pos_;
          return true;
        }
        return fail("expected term");
    }
  }

  // tuple := "(" [term {"," term}] ")"
  bool tuple() {
    if (!expect("(")) return false;
    if (accept(")")) return true;
    do {
      if (!term()) return false;
    } while (accept(","));
    return expect(")");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string err_;
};

inline CheckResult check_program(const std::string& src) {
  Checker c;
  return c.run(src);
}

}  // namespace aspcheck
