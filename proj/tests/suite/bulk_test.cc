// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/suite/bulk.h"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "owlfol/rdf/ntriples.h"
#include "owlfol/suite/test_case.h"

namespace owlfol::suite {
namespace {

std::set<std::string> iris_of(const rdf::Graph& g) {
  std::set<std::string> s;
  auto add = [&](const rdf::Node& n) {
    if (const auto* i = std::get_if<rdf::Iri>(&n)) s.insert(i->value);
    if (const auto* l = std::get_if<rdf::Literal>(&n)) {
      if (l->kind == rdf::LiteralKind::kTyped) s.insert(l->datatype.value);
    }
  };
  for (const auto& t : g.triples()) {
    add(t.subject);
    s.insert(t.predicate.value);
    add(t.object);
  }
  return s;
}

TEST(BulkTest, ZeroIsEmpty) { EXPECT_TRUE(gen_bulk(0, 5).empty()); }

TEST(BulkTest, NoOverlapWithSuiteVocabulary) {
  rdf::Graph bulk = gen_bulk(1200, 1);
  EXPECT_EQ(bulk.size(), 1200u);
  EXPECT_TRUE(bulk.blank_labels().empty());
  std::set<std::string> suite_iris;
  for (const auto& t : builtin_suite()) {
    auto p = iris_of(t.premise);
    suite_iris.insert(p.begin(), p.end());
    if (t.conclusion) {
      auto c = iris_of(*t.conclusion);
      suite_iris.insert(c.begin(), c.end());
    }
  }
  for (const auto& iri : iris_of(bulk)) {
    EXPECT_EQ(suite_iris.count(iri), 0u) << iri;
    EXPECT_EQ(iri.rfind(kBulkNamespace, 0), 0u) << iri;
  }
}

TEST(BulkTest, DeterministicPerSeed) {
  EXPECT_EQ(gen_bulk(300, 9), gen_bulk(300, 9));
  EXPECT_FALSE(gen_bulk(300, 9) == gen_bulk(300, 10));
}

TEST(BulkTest, StreamMatchesGraph) {
  std::ostringstream out;
  EXPECT_EQ(write_bulk(out, 1000, 3), 1000u);
  rdf::Graph parsed = rdf::parse_ntriples(out.str());
  EXPECT_EQ(parsed, gen_bulk(1000, 3));
}

TEST(BulkTest, PredicateAndSubjectRanges) {
  std::set<std::string> predicates, subjects;
  const rdf::Graph g = gen_bulk(4000, 2);
  for (const auto& t : g.triples()) {
    predicates.insert(t.predicate.value);
    subjects.insert(std::get<rdf::Iri>(t.subject).value);
  }
  EXPECT_LE(predicates.size(), kBulkPredicates);
  EXPECT_LE(subjects.size(), 1000u);
}

}  // namespace
}  // namespace owlfol::suite
