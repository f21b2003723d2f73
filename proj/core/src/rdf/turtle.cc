// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/rdf/turtle.h"

#include <cctype>
#include <istream>
#include <iterator>
#include <set>
#include <utility>
#include <vector>

#include "lex_util.h"
#include "owlfol/rdf/iri.h"

namespace owlfol::rdf {

namespace {

enum class Tok {
  kIri,
  kPname,
  kBlank,
  kString,
  kLangTag,
  kDatatypeMark,
  kPrefix,
  kBase,
  kA,
  kDot,
  kSemicolon,
  kComma,
  kLBracket,
  kRBracket,
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;    // IRI, label, string value, tag, or prefix label
  std::string local;   // local part of a prefixed name
  std::size_t line = 0;
  std::size_t column = 0;
};

bool is_pn_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == ':' || c == '%' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run(std::set<std::string>& explicit_labels) {
    std::vector<Token> out;
    for (;;) {
      skip_ws_and_comments();
      Token t;
      t.line = line_;
      t.column = col_;
      if (at_end()) {
        t.kind = Tok::kEnd;
        out.push_back(std::move(t));
        return out;
      }
      const bool after_string = !out.empty() && out.back().kind == Tok::kString;
      lex_one(t, after_string);
      if (t.kind == Tok::kBlank) explicit_labels.insert(t.text);
      out.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t off = 0) const {
    return pos_ + off < s_.size() ? s_[pos_ + off] : '\0';
  }
  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && !at_end(); ++i) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  void skip_ws_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void lex_one(Token& t, bool after_string) {
    char c = peek();
    switch (c) {
      case '<': lex_iri(t); return;
      case '"':
      case '\'': lex_string(t); return;
      case '@': lex_at(t, after_string); return;
      case '.':
        if (std::isdigit(static_cast<unsigned char>(peek(1)))) numeric_error();
        t.kind = Tok::kDot;
        advance();
        return;
      case ';': t.kind = Tok::kSemicolon; advance(); return;
      case ',': t.kind = Tok::kComma; advance(); return;
      case '[': t.kind = Tok::kLBracket; advance(); return;
      case ']': t.kind = Tok::kRBracket; advance(); return;
      case '(': t.kind = Tok::kLParen; advance(); return;
      case ')': t.kind = Tok::kRParen; advance(); return;
      case '^':
        if (peek(1) != '^') fail("expected '^^'");
        t.kind = Tok::kDatatypeMark;
        advance(2);
        return;
      default: break;
    }
    if (c == '_' && peek(1) == ':') {
      lex_blank(t);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') &&
         (std::isdigit(static_cast<unsigned char>(peek(1))) || peek(1) == '.'))) {
      numeric_error();
    }
    if (is_pn_char(c) || c == '\\') {
      lex_word(t);
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void numeric_error() const {
    fail("numeric shorthand is not supported; write a quoted typed literal");
  }

  void lex_iri(Token& t) {
    advance();
    std::string v;
    while (!at_end() && peek() != '>') {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        fail("whitespace inside IRI");
      }
      if (c == '\\') {
        std::size_t p = pos_;
        if (auto err = detail::decode_escape(s_, p, v)) fail(*err);
        advance(p - pos_);
        continue;
      }
      v += c;
      advance();
    }
    if (at_end()) fail("unterminated IRI");
    advance();
    t.kind = Tok::kIri;
    t.text = std::move(v);
  }

  void lex_string(Token& t) {
    const char q = peek();
    const bool long_form = peek(1) == q && peek(2) == q;
    advance(long_form ? 3 : 1);
    std::string v;
    for (;;) {
      if (at_end()) fail("unterminated string");
      char c = peek();
      if (long_form) {
        if (c == q && peek(1) == q && peek(2) == q) {
          advance(3);
          break;
        }
      } else {
        if (c == q) {
          advance();
          break;
        }
        if (c == '\n' || c == '\r') fail("line break in short string");
      }
      if (c == '\\') {
        std::size_t p = pos_;
        if (auto err = detail::decode_escape(s_, p, v)) fail(*err);
        advance(p - pos_);
        continue;
      }
      v += c;
      advance();
    }
    t.kind = Tok::kString;
    t.text = std::move(v);
  }

  void lex_at(Token& t, bool after_string) {
    advance();
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '-')) {
      advance();
    }
    std::string word(s_.substr(start, pos_ - start));
    if (after_string) {
      if (word.empty() || !std::isalpha(static_cast<unsigned char>(word[0]))) {
        fail("malformed language tag");
      }
      t.kind = Tok::kLangTag;
      t.text = std::move(word);
      return;
    }
    if (word == "prefix") {
      t.kind = Tok::kPrefix;
    } else if (word == "base") {
      t.kind = Tok::kBase;
    } else {
      fail("unknown directive @" + word);
    }
  }

  void lex_blank(Token& t) {
    advance(2);
    std::size_t start = pos_;
    while (!at_end() && detail::is_label_char(peek())) advance();
    std::size_t end = pos_;
    while (end > start && s_[end - 1] == '.') --end;
    if (end == start) fail("empty blank node label");
    // Trailing dots belong to the statement terminator.
    pos_ = end;
    recompute_column();
    t.kind = Tok::kBlank;
    t.text = std::string(s_.substr(start, end - start));
  }

  void lex_word(Token& t) {
    std::string word;
    while (!at_end()) {
      char c = peek();
      if (c == '\\') {
        char e = peek(1);
        static constexpr std::string_view kEscapable = "_~.-!$&'()*+,;=/?#@%";
        if (kEscapable.find(e) == std::string_view::npos || e == '\0') {
          fail("bad escape in local name");
        }
        word += '\\';
        word += e;
        advance(2);
        continue;
      }
      if (!is_pn_char(c)) break;
      word += c;
      advance();
    }
    // A trailing '.' terminates the statement rather than the name.
    std::size_t trailing = 0;
    while (trailing < word.size() && word[word.size() - 1 - trailing] == '.' &&
           !(word.size() >= trailing + 2 &&
             word[word.size() - 2 - trailing] == '\\')) {
      ++trailing;
    }
    if (trailing) {
      word.resize(word.size() - trailing);
      pos_ -= trailing;
      recompute_column();
    }
    auto colon = word.find(':');
    if (colon == std::string::npos) {
      if (word == "a") {
        t.kind = Tok::kA;
        return;
      }
      if (word == "true" || word == "false") {
        fail("boolean shorthand is not supported; write \"" + word +
             "\"^^xsd:boolean");
      }
      fail("unexpected word '" + word + "'");
    }
    std::string prefix = word.substr(0, colon);
    if (!prefix.empty() &&
        !std::isalpha(static_cast<unsigned char>(prefix[0])) &&
        static_cast<unsigned char>(prefix[0]) < 0x80) {
      fail("malformed prefix label '" + prefix + "'");
    }
    std::string local;
    const std::string raw = word.substr(colon + 1);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '\\' && i + 1 < raw.size()) {
        local += raw[++i];
      } else {
        local += raw[i];
      }
    }
    t.kind = Tok::kPname;
    t.text = std::move(prefix);
    t.local = std::move(local);
  }

  // Recomputes line and column for pos_ after a backtrack within one line.
  void recompute_column() {
    std::size_t line_start = 0;
    if (pos_ > 0) {
      std::size_t nl = s_.rfind('\n', pos_ - 1);
      if (nl != std::string_view::npos) line_start = nl + 1;
    }
    col_ = pos_ - line_start + 1;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::set<std::string> explicit_labels,
         std::optional<std::string> base)
      : toks_(std::move(tokens)), explicit_(std::move(explicit_labels)) {
    doc_.prefixes.base = std::move(base);
  }

  TurtleDocument run() {
    while (cur().kind != Tok::kEnd) statement();
    return std::move(doc_);
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column);
  }
  void expect(Tok k, const char* what) {
    if (cur().kind != k) fail(std::string("expected ") + what, cur());
    ++i_;
  }

  std::string resolve(const Token& t) const {
    if (has_scheme(t.text)) return resolve_iri(t.text, t.text);
    if (!doc_.prefixes.base) fail("relative IRI <" + t.text + "> without base", t);
    return resolve_iri(*doc_.prefixes.base, t.text);
  }

  Iri expand(const Token& t) const {
    if (t.kind == Tok::kIri) return Iri{resolve(t)};
    auto ns = doc_.prefixes.lookup(t.text);
    if (!ns) fail("undefined prefix '" + t.text + ":'", t);
    return Iri{*ns + t.local};
  }

  BlankNode fresh() {
    for (;;) {
      std::string label = "gen" + std::to_string(counter_++);
      if (!explicit_.count(label)) return BlankNode{std::move(label)};
    }
  }

  void emit(const Node& s, const Iri& p, Node o) {
    doc_.graph.add(Triple{s, p, std::move(o)});
  }

  void statement() {
    const Token& t = cur();
    if (t.kind == Tok::kPrefix) {
      ++i_;
      const Token& label = cur();
      if (label.kind != Tok::kPname || !label.local.empty()) {
        fail("expected prefix label such as 'ex:'", label);
      }
      ++i_;
      const Token& iri = cur();
      if (iri.kind != Tok::kIri) fail("expected namespace IRI", iri);
      ++i_;
      doc_.prefixes.bind(label.text, resolve(iri));
      expect(Tok::kDot, "'.' after @prefix");
      return;
    }
    if (t.kind == Tok::kBase) {
      ++i_;
      const Token& iri = cur();
      if (iri.kind != Tok::kIri) fail("expected base IRI", iri);
      ++i_;
      doc_.prefixes.base = resolve(iri);
      expect(Tok::kDot, "'.' after @base");
      return;
    }
    if (t.kind == Tok::kLBracket) {
      Node subject = blank_property_list();
      if (cur().kind != Tok::kDot) predicate_object_list(subject);
    } else {
      Node subject = read_subject();
      predicate_object_list(subject);
    }
    expect(Tok::kDot, "'.' at end of statement");
  }

  Node read_subject() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kIri:
      case Tok::kPname: ++i_; return expand(t);
      case Tok::kBlank: ++i_; return BlankNode{t.text};
      case Tok::kLParen: return collection();
      case Tok::kString: fail("literal in subject position", t);
      default: fail("expected subject", t);
    }
  }

  Iri read_verb() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kA:
        ++i_;
        return Iri{std::string(kRdfNs) + "type"};
      case Tok::kIri:
      case Tok::kPname: ++i_; return expand(t);
      case Tok::kString: fail("literal in predicate position", t);
      case Tok::kBlank:
      case Tok::kLBracket: fail("blank node in predicate position", t);
      default: fail("expected predicate", t);
    }
  }

  void predicate_object_list(const Node& subject) {
    for (;;) {
      Iri verb = read_verb();
      object_list(subject, verb);
      if (cur().kind != Tok::kSemicolon) return;
      while (cur().kind == Tok::kSemicolon) ++i_;
      if (cur().kind == Tok::kDot || cur().kind == Tok::kRBracket) return;
    }
  }

  void object_list(const Node& subject, const Iri& verb) {
    for (;;) {
      Node o = read_object();
      emit(subject, verb, std::move(o));
      if (cur().kind != Tok::kComma) return;
      ++i_;
    }
  }

  Node read_object() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kIri:
      case Tok::kPname: ++i_; return expand(t);
      case Tok::kBlank: ++i_; return BlankNode{t.text};
      case Tok::kLBracket: return blank_property_list();
      case Tok::kLParen: return collection();
      case Tok::kString: return literal();
      default: fail("expected object", t);
    }
  }

  Node literal() {
    std::string lex = next().text;
    if (cur().kind == Tok::kLangTag) {
      return Literal::lang_tagged(std::move(lex), next().text);
    }
    if (cur().kind == Tok::kDatatypeMark) {
      ++i_;
      const Token& dt = cur();
      if (dt.kind != Tok::kIri && dt.kind != Tok::kPname) {
        fail("expected datatype IRI", dt);
      }
      ++i_;
      return Literal::typed(std::move(lex), expand(dt));
    }
    return Literal::plain(std::move(lex));
  }

  Node blank_property_list() {
    expect(Tok::kLBracket, "'['");
    BlankNode b = fresh();
    if (cur().kind == Tok::kRBracket) {
      ++i_;
      return b;
    }
    predicate_object_list(b);
    expect(Tok::kRBracket, "']'");
    return b;
  }

  Node collection() {
    expect(Tok::kLParen, "'('");
    const Iri first{std::string(kRdfNs) + "first"};
    const Iri rest{std::string(kRdfNs) + "rest"};
    const Iri nil{std::string(kRdfNs) + "nil"};
    std::optional<Node> head;
    std::optional<Node> prev;
    while (cur().kind != Tok::kRParen) {
      if (cur().kind == Tok::kEnd) fail("unterminated collection", cur());
      Node cell = fresh();
      Node item = read_object();
      emit(cell, first, std::move(item));
      if (prev) emit(*prev, rest, cell);
      if (!head) head = cell;
      prev = std::move(cell);
    }
    ++i_;
    if (!head) return nil;
    emit(*prev, rest, nil);
    return *head;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::set<std::string> explicit_;
  std::size_t counter_ = 0;
  TurtleDocument doc_;
};

}  // namespace

TurtleDocument parse_turtle_document(std::string_view text,
                                     std::optional<std::string> base) {
  std::set<std::string> labels;
  std::vector<Token> tokens = Lexer(text).run(labels);
  return Parser(std::move(tokens), std::move(labels), std::move(base)).run();
}

Graph parse_turtle(std::string_view text, std::optional<std::string> base) {
  return parse_turtle_document(text, std::move(base)).graph;
}

Graph parse_turtle(std::istream& in, std::optional<std::string> base) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_turtle(text, std::move(base));
}

}  // namespace owlfol::rdf
