// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/fol/tptp_reader.h"

#include <cctype>
#include <optional>
#include <utility>

namespace owlfol::fol {

TptpSyntaxError::TptpSyntaxError(const std::string& message, std::size_t line,
                                 std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kLower, kUpper, kDollar, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
  // Directive lines seen since the previous token.
  std::map<std::string, std::string> directives;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Parses "key: value" where key is [a-z][a-z-]*.
std::optional<std::pair<std::string, std::string>> key_value(
    std::string_view s) {
  std::string t = trim(s);
  auto colon = t.find(':');
  if (colon == std::string::npos || colon == 0) return std::nullopt;
  if (!std::islower(static_cast<unsigned char>(t[0]))) return std::nullopt;
  for (std::size_t i = 0; i < colon; ++i) {
    char c = t[i];
    if (!std::islower(static_cast<unsigned char>(c)) && c != '-') {
      return std::nullopt;
    }
  }
  return std::make_pair(t.substr(0, colon), trim(t.substr(colon + 1)));
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::map<std::string, std::string> header;

  Token next() {
    Token t;
    skip(t);
    t.line = line_;
    t.column = col_;
    if (pos_ >= s_.size()) return t;
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '$') {
      std::size_t start = pos_;
      advance();
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        advance();
      }
      t.text = std::string(s_.substr(start, pos_ - start));
      t.kind = c == '$'                                     ? Tok::kDollar
               : std::isupper(static_cast<unsigned char>(c)) ? Tok::kUpper
                                                             : Tok::kLower;
      return t;
    }
    static constexpr std::string_view kMulti[] = {"<~>", "<=>", "=>", "<=",
                                                  "!=",  "~|",  "~&"};
    for (std::string_view m : kMulti) {
      if (s_.substr(pos_, m.size()) == m) {
        t.kind = Tok::kPunct;
        t.text = std::string(m);
        advance(m.size());
        return t;
      }
    }
    static constexpr std::string_view kSingle = "()[],.:!?~&|=";
    if (kSingle.find(c) == std::string_view::npos) {
      throw TptpSyntaxError(std::string("unexpected character '") + c + "'",
                            line_, col_);
    }
    t.kind = Tok::kPunct;
    t.text = std::string(1, c);
    advance();
    return t;
  }

  bool seen_unit = false;

 private:
  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < s_.size(); ++i) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip(Token& t) {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        std::size_t end = s_.find('\n', pos_);
        if (end == std::string_view::npos) end = s_.size();
        std::string_view line = s_.substr(pos_ + 1, end - pos_ - 1);
        if (!line.empty() && line.front() == '@') {
          if (auto kv = key_value(line.substr(1))) {
            t.directives[kv->first] = kv->second;
          }
        } else if (!seen_unit) {
          if (auto kv = key_value(line)) header[kv->first] = kv->second;
        }
        advance(end - pos_);
      } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*') {
        std::size_t end = s_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) {
          throw TptpSyntaxError("unterminated comment", line_, col_);
        }
        advance(end + 2 - pos_);
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  TptpFile file() {
    TptpFile out;
    while (tok_.kind != Tok::kEnd) {
      TptpUnit unit;
      unit.line = tok_.line;
      unit.directives = tok_.directives;
      if (tok_.kind != Tok::kLower || tok_.text != "fof") {
        fail("expected fof(");
      }
      lex_.seen_unit = true;
      shift();
      expect("(");
      unit.formula.name = name();
      expect(",");
      if (tok_.kind != Tok::kLower) fail("expected role");
      unit.formula.role = tok_.text == "conjecture" ? Role::kConjecture
                                                    : Role::kAxiom;
      shift();
      expect(",");
      unit.formula.formula = logic_formula();
      expect(")");
      expect(".");
      out.units.push_back(std::move(unit));
    }
    out.header = lex_.header;
    return out;
  }

  Formula single() {
    Formula f = logic_formula();
    if (tok_.kind != Tok::kEnd) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw TptpSyntaxError(msg + (tok_.kind == Tok::kEnd
                                     ? " at end of input"
                                     : " near '" + tok_.text + "'"),
                          tok_.line, tok_.column);
  }
  void shift() { tok_ = lex_.next(); }
  bool is(std::string_view punct) const {
    return tok_.kind == Tok::kPunct && tok_.text == punct;
  }
  void expect(std::string_view punct) {
    if (!is(punct)) fail("expected '" + std::string(punct) + "'");
    shift();
  }

  std::string name() {
    if (tok_.kind != Tok::kLower) fail("expected a name");
    std::string n = tok_.text;
    shift();
    return n;
  }

  Formula logic_formula() {
    Formula lhs = unitary();
    if (is("&") || is("|")) {
      const std::string op = tok_.text;
      std::vector<Formula> parts;
      parts.push_back(std::move(lhs));
      while (is(op)) {
        shift();
        parts.push_back(unitary());
      }
      if (is("&") || is("|")) fail("mixed & and | need parentheses");
      return op == "&" ? conj(std::move(parts)) : disj(std::move(parts));
    }
    static constexpr std::string_view kBinary[] = {"=>", "<=", "<=>", "<~>",
                                                   "~|", "~&"};
    for (std::string_view b : kBinary) {
      if (!is(b)) continue;
      shift();
      Formula rhs = unitary();
      if (b == "=>") return implies(std::move(lhs), std::move(rhs));
      if (b == "<=") return implies(std::move(rhs), std::move(lhs));
      if (b == "<=>") return iff(std::move(lhs), std::move(rhs));
      if (b == "<~>") return neg(iff(std::move(lhs), std::move(rhs)));
      if (b == "~|") return neg(disj({std::move(lhs), std::move(rhs)}));
      return neg(conj({std::move(lhs), std::move(rhs)}));
    }
    return lhs;
  }

  Formula unitary() {
    if (is("!") || is("?")) {
      const bool universal = is("!");
      shift();
      expect("[");
      std::vector<std::string> vars;
      for (;;) {
        if (tok_.kind != Tok::kUpper) fail("expected variable");
        vars.push_back(tok_.text);
        shift();
        if (is("]")) break;
        expect(",");
      }
      shift();
      expect(":");
      Formula body = unitary();
      return universal ? forall(std::move(vars), std::move(body))
                       : exists(std::move(vars), std::move(body));
    }
    if (is("~")) {
      shift();
      return neg(unitary());
    }
    if (is("(")) {
      shift();
      Formula f = logic_formula();
      expect(")");
      return f;
    }
    if (tok_.kind == Tok::kDollar) {
      std::string w = tok_.text;
      shift();
      if (w == "$true") return top();
      if (w == "$false") return bottom();
      fail("unknown defined word " + w);
    }
    Term lhs = term();
    if (is("=") || is("!=")) {
      const bool negated = is("!=");
      shift();
      Term rhs = term();
      Formula eq = equal(std::move(lhs), std::move(rhs));
      return negated ? neg(std::move(eq)) : eq;
    }
    if (lhs.kind == Term::Kind::kVar) fail("variable used as a formula");
    return atom(std::move(lhs.name), std::move(lhs.args));
  }

  Term term() {
    if (tok_.kind == Tok::kUpper) {
      Term v = Term::var(tok_.text);
      shift();
      return v;
    }
    if (tok_.kind != Tok::kLower) fail("expected term");
    std::string n = tok_.text;
    shift();
    if (!is("(")) return Term::constant(std::move(n));
    shift();
    std::vector<Term> args;
    for (;;) {
      args.push_back(term());
      if (is(")")) break;
      expect(",");
    }
    shift();
    return Term::func(std::move(n), std::move(args));
  }

  Lexer lex_;
  Token tok_;
};

}  // namespace

TptpFile read_tptp(std::string_view text) { return Parser(text).file(); }

Formula parse_formula(std::string_view text) { return Parser(text).single(); }

Problem parse_problem(std::string_view text) {
  Problem p;
  for (TptpUnit& u : read_tptp(text).units) p.add(std::move(u.formula));
  return p;
}

}  // namespace owlfol::fol
