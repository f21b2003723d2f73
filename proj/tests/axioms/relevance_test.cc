// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/axioms/relevance.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "owlfol/axioms/store.h"
#include "owlfol/fol/translate.h"
#include "owlfol/rdf/model.h"
#include "owlfol/suite/bulk.h"
#include "owlfol/suite/test_case.h"

namespace owlfol::axioms {
namespace {

std::set<std::string> names(const std::vector<AxiomEntry>& v) {
  std::set<std::string> s;
  for (const auto& e : v) s.insert(e.name);
  return s;
}

// Level-synchronous reachability written directly over name sets.
std::set<std::string> oracle(const std::vector<AxiomEntry>& axioms,
                             std::set<std::string> reached,
                             std::optional<std::size_t> hops) {
  std::set<std::string> admitted;
  for (const auto& a : axioms) {
    if (a.symbols.empty()) admitted.insert(a.name);
  }
  for (std::size_t level = 0; !hops || level < *hops; ++level) {
    std::vector<const AxiomEntry*> fresh;
    for (const auto& a : axioms) {
      if (admitted.count(a.name)) continue;
      for (const auto& s : a.symbols) {
        if (reached.count(s)) {
          fresh.push_back(&a);
          break;
        }
      }
    }
    if (fresh.empty()) break;
    for (const auto* a : fresh) {
      admitted.insert(a->name);
      reached.insert(a->symbols.begin(), a->symbols.end());
    }
  }
  return admitted;
}

std::set<std::string> goal_of(const suite::TestCase& t, const rdf::Graph* extra = nullptr) {
  fol::Mangler m(t.prefixes);
  std::set<std::string> s;
  rdf::Graph premise = extra ? rdf::graph_union(t.premise, *extra) : t.premise;
  fol::collect_symbols(fol::translate_graph_formula(premise, m), s);
  if (t.conclusion) fol::collect_symbols(fol::translate_graph_formula(*t.conclusion, m), s);
  return s;
}

const std::vector<AxiomEntry>& full() {
  static const auto v = AxiomStore::builtin().load_profile(kOwl2Full);
  return v;
}

TEST(RelevanceTest, EmptyGoalAtHopZeroAdmitsOnlySymbolFreeEntries) {
  std::set<std::string> expected;
  for (const auto& a : full()) {
    if (a.symbols.empty()) expected.insert(a.name);
  }
  EXPECT_EQ(names(select_relevant(full(), {}, 0)), expected);
  EXPECT_EQ(names(select_relevant(full(), {}, std::nullopt)), expected);
}

TEST(RelevanceTest, MatchesOracleOnEveryTest) {
  for (const auto& t : suite::builtin_suite()) {
    const auto goal = goal_of(t);
    for (std::optional<std::size_t> hops :
         {std::optional<std::size_t>(0), std::optional<std::size_t>(1),
          std::optional<std::size_t>(2), std::optional<std::size_t>(3),
          std::optional<std::size_t>()}) {
      EXPECT_EQ(names(select_relevant(full(), goal, hops)), oracle(full(), goal, hops))
          << t.id << " hops " << (hops ? std::to_string(*hops) : "fixpoint");
    }
  }
}

TEST(RelevanceTest, KeepsInputOrder) {
  const auto sel = select_relevant(full(), goal_of(suite::builtin_suite().at(19)), std::nullopt);
  std::vector<std::size_t> positions;
  for (const auto& e : sel) {
    auto it = std::find_if(full().begin(), full().end(),
                           [&](const AxiomEntry& a) { return a.name == e.name; });
    positions.push_back(static_cast<std::size_t>(it - full().begin()));
  }
  EXPECT_TRUE(std::is_sorted(positions.begin(), positions.end()));
}

TEST(RelevanceTest, MonotoneInHopsAndGoal) {
  std::mt19937_64 rng(7);
  std::vector<std::string> vocabulary;
  for (const auto& a : full()) vocabulary.insert(vocabulary.end(), a.symbols.begin(), a.symbols.end());
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()), vocabulary.end());
  for (int round = 0; round < 50; ++round) {
    std::set<std::string> small, large;
    for (const auto& s : vocabulary) {
      const auto r = rng() % 20;
      if (r == 0) small.insert(s);
      if (r <= 1) large.insert(s);
    }
    const auto fix = names(select_relevant(full(), small, std::nullopt));
    std::set<std::string> previous;
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto sel = names(select_relevant(full(), small, k));
      EXPECT_TRUE(std::includes(sel.begin(), sel.end(), previous.begin(), previous.end()));
      EXPECT_TRUE(std::includes(fix.begin(), fix.end(), sel.begin(), sel.end()));
      const auto bigger = names(select_relevant(full(), large, k));
      EXPECT_TRUE(std::includes(bigger.begin(), bigger.end(), sel.begin(), sel.end()));
      previous = sel;
    }
  }
}

TEST(RelevanceTest, FullVocabularyReachesWholeProfile) {
  std::set<std::string> vocabulary;
  for (const auto& a : full()) vocabulary.insert(a.symbols.begin(), a.symbols.end());
  EXPECT_EQ(names(select_relevant(full(), vocabulary, std::nullopt)), names(full()));
}

TEST(RelevanceTest, BulkDoesNotChangeFixpointSelection) {
  const rdf::Graph bulk = suite::gen_bulk(1200, 1);
  for (const auto& t : suite::builtin_suite()) {
    EXPECT_EQ(names(select_relevant(full(), goal_of(t, &bulk), std::nullopt)),
              names(select_relevant(full(), goal_of(t), std::nullopt)))
        << t.id;
  }
}

}  // namespace
}  // namespace owlfol::axioms
