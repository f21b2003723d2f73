// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/fol/translate.h"

#include <gtest/gtest.h>

#include "owlfol/fol/tptp_writer.h"
#include "owlfol/rdf/turtle.h"
#include "test_support.h"

namespace owlfol::fol {
namespace {

Term c(const char* n) { return Term::constant(n); }

TEST(TranslateTest, FoafExample) {
  rdf::TurtleDocument d = rdf::parse_turtle_document(R"(
@prefix foaf: <http://xmlns.com/foaf/0.1/> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
_:x a foaf:Person ; foaf:name "Alice"^^xsd:string .
)");
  Mangler m(d.prefixes);
  Formula f = translate_graph_formula(d.graph, m);
  Term x = Term::var("B_x");
  Formula expected = exists(
      {"B_x"},
      conj({iext(c("uri_foaf_name"), x,
                 Term::func("literal_typed", {c("lex_Alice"), c("uri_xsd_string")})),
            iext(c("uri_rdf_type"), x, c("uri_foaf_Person"))}));
  EXPECT_EQ(testing::alpha_normal_form(f), testing::alpha_normal_form(expected));
  EXPECT_EQ(collect_symbols(f),
            (std::set<std::string>{"uri_rdf_type", "uri_foaf_Person", "uri_foaf_name",
                                   "literal_typed", "lex_Alice", "uri_xsd_string"}));
}

TEST(TranslateTest, EmptyGraphIsTrue) {
  NamedFormula nf = translate_graph(rdf::Graph{}, Role::kAxiom, "testcase_premise");
  EXPECT_EQ(nf.formula.op(), Op::kTrue);
  EXPECT_EQ(nf.role, Role::kAxiom);
}

TEST(TranslateTest, GroundGraphHasNoQuantifier) {
  rdf::Graph g = rdf::parse_turtle("<http://a> <http://b> <http://c> .");
  Formula f = translate_graph(g, Role::kAxiom, "p").formula;
  EXPECT_EQ(f.op(), Op::kAtom);
}

TEST(TranslateTest, Test020Conclusion) {
  rdf::TurtleDocument d = rdf::parse_turtle_document(
      testing::read_file(testing::source_path("suite/020/conclusion.ttl")));
  NamedFormula nf = translate_graph(d.graph, Role::kConjecture, "testcase_conclusion",
                                    d.prefixes);
  EXPECT_EQ(nf.formula, iext(c("uri_rdfs_subClassOf"), c("uri_ex_d"), c("uri_ex_c3")));
}

TEST(TranslateTest, Test003UsesPlainLiteral) {
  rdf::Graph g = rdf::parse_turtle(
      testing::read_file(testing::source_path("suite/003/premise.ttl")));
  Formula f = translate_graph(g, Role::kAxiom, "p").formula;
  EXPECT_EQ(f, iext(c("uri_ex_p"), c("uri_ex_s"), Term::func("literal_plain", {c("lex_foo")})));
}

TEST(TranslateTest, LanguageTaggedLiteral) {
  Mangler m;
  Term t = translate_node(rdf::Literal::lang_tagged("chat", "FR"), m);
  EXPECT_EQ(t, Term::func("literal_lang", {c("lex_chat"), c("lang_fr")}));
  EXPECT_EQ(translate_node(rdf::BlankNode{"a-b"}, m), Term::var("B_a_2db"));
}

TEST(TranslateTest, ConjunctsFollowCanonicalTripleOrder) {
  rdf::Graph a = rdf::parse_turtle("<http://z> <http://p> <http://o> . <http://a> <http://p> <http://o> .");
  rdf::Graph b = rdf::parse_turtle("<http://a> <http://p> <http://o> . <http://z> <http://p> <http://o> .");
  EXPECT_EQ(to_tptp(translate_graph(a, Role::kAxiom, "g")),
            to_tptp(translate_graph(b, Role::kAxiom, "g")));
}

}  // namespace
}  // namespace owlfol::fol
