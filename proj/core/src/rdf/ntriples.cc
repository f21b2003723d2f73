// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/rdf/ntriples.h"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "lex_util.h"

namespace owlfol::rdf {

namespace {

void escape_into(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no)
      : s_(line), line_no_(line_no) {}

  // Returns false for blank and comment-only lines.
  bool parse(Triple& out) {
    skip_ws();
    if (at_end() || peek() == '#') return false;
    Node subject = read_subject();
    skip_ws();
    if (peek() != '<') fail("expected IRI in predicate position");
    Iri predicate{read_iri()};
    skip_ws();
    Node object = read_object();
    skip_ws();
    if (peek() != '.') fail("expected '.' at end of triple");
    ++pos_;
    skip_ws();
    if (!at_end() && peek() != '#') fail("unexpected text after '.'");
    out = Triple{std::move(subject), std::move(predicate), std::move(object)};
    return true;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
      ++pos_;
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_no_, pos_ + 1);
  }

  std::string read_iri() {
    ++pos_;
    std::string v;
    while (!at_end() && peek() != '>') {
      char c = peek();
      if (c == ' ' || c == '\t') fail("whitespace inside IRI");
      if (c == '\\') {
        if (auto err = detail::decode_escape(s_, pos_, v)) fail(*err);
        continue;
      }
      v += c;
      ++pos_;
    }
    if (at_end()) fail("unterminated IRI");
    ++pos_;
    if (v.empty()) fail("empty IRI");
    return v;
  }

  BlankNode read_blank() {
    if (s_.substr(pos_, 2) != "_:") fail("expected blank node");
    pos_ += 2;
    std::size_t start = pos_;
    while (!at_end() && detail::is_label_char(peek())) ++pos_;
    while (pos_ > start && s_[pos_ - 1] == '.') --pos_;
    if (pos_ == start) fail("empty blank node label");
    return BlankNode{std::string(s_.substr(start, pos_ - start))};
  }

  Node read_subject() {
    if (peek() == '<') return Iri{read_iri()};
    if (peek() == '_') return read_blank();
    if (peek() == '"') fail("literal in subject position");
    fail("expected IRI or blank node in subject position");
  }

  Node read_object() {
    if (peek() == '<') return Iri{read_iri()};
    if (peek() == '_') return read_blank();
    if (peek() != '"') fail("expected object");
    ++pos_;
    std::string lex;
    while (!at_end() && peek() != '"') {
      if (peek() == '\\') {
        if (auto err = detail::decode_escape(s_, pos_, lex)) fail(*err);
        continue;
      }
      lex += peek();
      ++pos_;
    }
    if (at_end()) fail("unterminated string");
    ++pos_;
    if (peek() == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '-')) {
        ++pos_;
      }
      if (pos_ == start) fail("empty language tag");
      return Literal::lang_tagged(std::move(lex),
                                  std::string(s_.substr(start, pos_ - start)));
    }
    if (s_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (peek() != '<') fail("expected datatype IRI");
      return Literal::typed(std::move(lex), Iri{read_iri()});
    }
    return Literal::plain(std::move(lex));
  }

  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_ntriples_term(const Node& n) {
  std::string out;
  if (const auto* iri = std::get_if<Iri>(&n)) {
    out += '<';
    out += iri->value;
    out += '>';
  } else if (const auto* b = std::get_if<BlankNode>(&n)) {
    out += "_:";
    out += b->label;
  } else {
    const auto& lit = std::get<Literal>(n);
    out += '"';
    escape_into(out, lit.lexical);
    out += '"';
    if (lit.kind == LiteralKind::kLangTagged) {
      out += '@';
      out += lit.lang;
    } else if (lit.kind == LiteralKind::kTyped) {
      out += "^^<";
      out += lit.datatype.value;
      out += '>';
    }
  }
  return out;
}

std::string to_ntriples(const Triple& t) {
  return to_ntriples_term(t.subject) + " <" + t.predicate.value + "> " +
         to_ntriples_term(t.object) + " .";
}

std::string write_ntriples(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g.triples()) lines.push_back(to_ntriples(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

void read_ntriples(std::istream& in,
                   const std::function<void(Triple&&)>& sink) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Triple t;
    if (LineReader(line, line_no).parse(t)) sink(std::move(t));
  }
}

Graph parse_ntriples(std::istream& in) {
  Graph g;
  read_ntriples(in, [&g](Triple&& t) { g.add(std::move(t)); });
  return g;
}

Graph parse_ntriples(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ntriples(in);
}

}  // namespace owlfol::rdf
