// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "owlfol/fol/tptp_reader.h"
#include "owlfol/fol/tptp_writer.h"

namespace owlfol::fol {
namespace {

Term c(const char* n) { return Term::constant(n); }
Term v(const char* n) { return Term::var(n); }

TEST(TptpWriterTest, TrueAxiom) {
  Problem p;
  p.add("n", Role::kAxiom, top());
  EXPECT_EQ(serialize_tptp(p), "fof(n, axiom, ( $true )).\n");
}

TEST(TptpWriterTest, Terms) {
  EXPECT_EQ(to_tptp(Term::func("literal_typed", {c("lex_a"), c("uri_xsd_string")})),
            "literal_typed(lex_a, uri_xsd_string)");
}

TEST(TptpWriterTest, Connectives) {
  EXPECT_EQ(to_tptp(neg(equal(v("X"), v("Y")))), "X != Y");
  EXPECT_EQ(to_tptp(forall({"X", "Y"}, implies(atom("ic", {v("X")}), atom("ic", {v("Y")})))),
            "! [X, Y] : ( ic(X) => ic(Y) )");
  EXPECT_EQ(to_tptp(conj({atom("ic", {c("a")}), disj({atom("ip", {c("a")}), atom("ir", {c("a")})})})),
            "ic(a) & ( ip(a) | ir(a) )");
  EXPECT_EQ(to_tptp(neg(atom("ic", {c("a")}))), "~ ic(a)");
  EXPECT_EQ(to_tptp(bottom()), "$false");
}

TEST(TptpWriterTest, LongFormulaWrapsWithinWidth) {
  std::vector<Formula> parts;
  for (int i = 0; i < 12; ++i) {
    parts.push_back(iext(c("uri_rdf_first"), v("X"), Term::constant("uri_ex_c" + std::to_string(i))));
  }
  NamedFormula nf{"long", Role::kAxiom, exists({"X"}, conj(parts))};
  const std::string text = to_tptp(nf);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    EXPECT_LE(end - start, kTptpLineWidth + 10) << text.substr(start, end - start);
    start = end + 1;
  }
  EXPECT_EQ(parse_problem(text).formulas().front(), nf);
}

TEST(TptpWriterTest, CommentsAndBlankLineSeparation) {
  Problem p;
  p.add("a", Role::kAxiom, top());
  p.add("b", Role::kConjecture, bottom());
  EXPECT_EQ(serialize_tptp(p, {"generated", "test: x"}),
            "% generated\n% test: x\n\nfof(a, axiom, ( $true )).\n\n"
            "fof(b, conjecture, ( $false )).\n");
}

TEST(TptpReaderTest, Operators) {
  Formula f = parse_formula("! [X] : (ic(X) <= ir(X))");
  EXPECT_EQ(f, forall({"X"}, implies(atom("ir", {v("X")}), atom("ic", {v("X")}))));
  EXPECT_EQ(parse_formula("a = b"), equal(c("a"), c("b")));
  EXPECT_EQ(parse_formula("a != b"), neg(equal(c("a"), c("b"))));
  EXPECT_EQ(parse_formula("ic(a) <~> ic(b)"), neg(iff(atom("ic", {c("a")}), atom("ic", {c("b")}))));
  EXPECT_EQ(parse_formula("ic(a) ~| ic(b)"), neg(disj({atom("ic", {c("a")}), atom("ic", {c("b")})})));
  EXPECT_EQ(parse_formula("ic(a) ~& ic(b)"), neg(conj({atom("ic", {c("a")}), atom("ic", {c("b")})})));
  EXPECT_EQ(parse_formula("$true"), top());
  EXPECT_EQ(parse_formula("? [Y] : ~ ic(Y)"), exists({"Y"}, neg(atom("ic", {v("Y")}))));
}

TEST(TptpReaderTest, AssociativeChainsFlatten) {
  Formula f = parse_formula("ic(a) & ic(b) & ic(c)");
  ASSERT_EQ(f.op(), Op::kAnd);
  EXPECT_EQ(f.children().size(), 3u);
}

TEST(TptpReaderTest, HeaderAndDirectives) {
  TptpFile file = read_tptp(
      "% profiles: owl2-full rdfs-ext\n% feature: x\n\n%@ feature: x.y\n"
      "fof(a, axiom, ic(a)).\nfof(b, hypothesis, ic(b)).\n");
  EXPECT_EQ(file.header.at("profiles"), "owl2-full rdfs-ext");
  ASSERT_EQ(file.units.size(), 2u);
  EXPECT_EQ(file.units[0].directives.at("feature"), "x.y");
  EXPECT_TRUE(file.units[1].directives.empty());
  EXPECT_EQ(file.units[1].formula.role, Role::kAxiom);
  EXPECT_EQ(file.units[1].line, 6u);
}

TEST(TptpReaderTest, SyntaxErrorPosition) {
  try {
    read_tptp("fof(a, axiom, ic(a)).\nfof(b, axiom, ic(a) & ).\n");
    FAIL() << "expected TptpSyntaxError";
  } catch (const TptpSyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(read_tptp("cnf(a, axiom, ic(a))."), TptpSyntaxError);
  EXPECT_THROW(read_tptp("fof(a, axiom, ic(a))"), TptpSyntaxError);
}

TEST(TptpRoundTripTest, WriterOutputParsesBack) {
  Problem p;
  p.add("a", Role::kAxiom,
        forall({"X", "Y"}, iff(iext(c("uri_owl_sameAs"), v("X"), v("Y")),
                               conj({equal(v("X"), v("Y")), neg(atom("ic", {c("k")}))}))));
  p.add("g", Role::kConjecture,
        exists({"Z"}, disj({atom("ip", {v("Z")}), neg(equal(v("Z"), c("k")))})));
  EXPECT_EQ(parse_problem(serialize_tptp(p, {"c"})), p);
}

}  // namespace
}  // namespace owlfol::fol
