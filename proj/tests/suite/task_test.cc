// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/suite/task.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "owlfol/fol/tptp_reader.h"
#include "owlfol/fol/tptp_writer.h"
#include "owlfol/suite/bulk.h"
#include "owlfol/suite/test_case.h"
#include "test_support.h"

namespace owlfol::suite {
namespace {

const TestCase& test(std::string_view number) {
  for (const auto& t : builtin_suite()) {
    if (t.number() == number) return t;
  }
  throw std::out_of_range(std::string(number));
}

const axioms::AxiomStore& store() { return axioms::AxiomStore::builtin(); }

RunConfig profile_config(Filter f = Filter::fixpoint()) {
  RunConfig cfg;
  cfg.selection = Selection::kProfile;
  cfg.profile = std::string(axioms::kOwl2Full);
  cfg.filter = f;
  return cfg;
}

std::vector<fol::Formula> conjuncts(const fol::Formula& f) {
  const fol::Formula& m = f.op() == fol::Op::kExists ? f.body() : f;
  if (m.op() == fol::Op::kAnd) return m.children();
  return {m};
}

TEST(BuildTaskTest, Test020SubsetIsTheReferenceProblem) {
  Task task = build_task(test("020"), RunConfig{}, store());
  const auto& fs = task.problem.formulas();
  ASSERT_EQ(fs.size(), 8u);
  EXPECT_EQ(fs[6].name, kPremiseName);
  EXPECT_EQ(fs[7].name, kConclusionName);
  fol::Problem c2 = fol::parse_problem(testing::read_file(testing::data_path("c2_axioms.p")));
  for (const auto& ref : c2.formulas()) {
    auto it = std::find(fs.begin(), fs.end(), ref);
    EXPECT_NE(it, fs.end()) << ref.name;
  }
  fol::Problem c1 = fol::parse_problem(testing::read_file(testing::data_path("c1_conclusion.p")));
  EXPECT_EQ(fs[7], c1.formulas().front());
  fol::Problem c1p = fol::parse_problem(testing::read_file(testing::data_path("c1_premise.p")));
  EXPECT_EQ(testing::alpha_normal_form(fs[6].formula),
            testing::alpha_normal_form(c1p.formulas().front().formula));
}

TEST(BuildTaskTest, EmptyPremiseIsOmitted) {
  Task task = build_task(test("004"), RunConfig{}, store());
  EXPECT_FALSE(task.problem.contains(kPremiseName));
  ASSERT_NE(task.problem.conjecture(), nullptr);
  EXPECT_EQ(task.problem.formulas().back().name, kConclusionName);
}

TEST(BuildTaskTest, InconsistencyConjectureIsFalse) {
  for (const char* n : {"011", "019", "030", "031"}) {
    for (const RunConfig& cfg : {RunConfig{}, profile_config()}) {
      Task task = build_task(test(n), cfg, store());
      EXPECT_EQ(task.problem.conjecture()->formula.op(), fol::Op::kFalse) << n;
    }
  }
}

TEST(BuildTaskTest, FilterInSubsetModeIsRejected) {
  RunConfig cfg;
  cfg.filter = Filter::with_hops(2);
  EXPECT_THROW(build_task(test("020"), cfg, store()), std::invalid_argument);
  RunConfig bad = profile_config();
  bad.profile = "unknown";
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(BuildTaskTest, EveryProblemIsValid) {
  for (const auto& t : builtin_suite()) {
    for (const RunConfig& cfg : {RunConfig{}, profile_config(), profile_config(Filter::off())}) {
      Task task = build_task(t, cfg, store());
      for (const auto& nf : task.problem.formulas()) {
        ASSERT_NO_THROW(fol::validate(nf.formula)) << t.id << " " << nf.name;
      }
      const std::string text = fol::serialize_tptp(task.problem, problem_header(t, cfg));
      ASSERT_EQ(fol::parse_problem(text), task.problem) << t.id;
    }
  }
}

TEST(BuildTaskTest, ProfileWithoutFilterUsesWholeProfile) {
  Task task = build_task(test("001"), profile_config(Filter::off()), store());
  EXPECT_EQ(task.axiom_names.size(), store().load_profile(axioms::kOwl2Full).size());
}

// Premise conjuncts of the plain problem are a subset of the bulk ones and
// nothing else changes.
TEST(BulkNeutralityTest, ProblemDiffersOnlyInPremise) {
  for (std::size_t n : {0u, 1200u, 10000u}) {
    const rdf::Graph bulk = gen_bulk(n, 1);
    for (const auto& t : builtin_suite()) {
      RunConfig cfg = profile_config();
      const Task plain = build_task(t, cfg, store());
      cfg.bulk_n = n;
      const Task with_bulk = build_task(t, cfg, store(), &bulk);
      ASSERT_EQ(with_bulk.axiom_names, plain.axiom_names) << t.id << " n=" << n;
      const auto& a = plain.problem.formulas();
      const auto& b = with_bulk.problem.formulas();
      const std::size_t axioms = plain.axiom_names.size();
      for (std::size_t i = 0; i < axioms; ++i) ASSERT_EQ(a[i], b[i]);
      ASSERT_EQ(a.back(), b.back()) << t.id;
      const fol::NamedFormula* pb = nullptr;
      for (const auto& f : b) if (f.name == kPremiseName) pb = &f;
      if (n == 0) {
        ASSERT_EQ(a, b) << t.id;
        continue;
      }
      ASSERT_NE(pb, nullptr);
      ASSERT_EQ(fol::count_atoms(pb->formula, "iext"), t.premise.size() + n);
      const fol::NamedFormula* pa = nullptr;
      for (const auto& f : a) if (f.name == kPremiseName) pa = &f;
      if (!pa) continue;
      const auto big = conjuncts(pb->formula);
      for (const auto& c : conjuncts(pa->formula)) {
        ASSERT_NE(std::find(big.begin(), big.end(), c), big.end()) << t.id;
      }
      if (pa->formula.op() == fol::Op::kExists) {
        ASSERT_EQ(pb->formula.vars(), pa->formula.vars()) << t.id;
      }
    }
  }
}

TEST(TaskKindTest, ModelFindingReinterpretsKinds) {
  EXPECT_EQ(effective_kind(test("020"), prover::Mode::kModelfind), prover::TaskKind::kNonEntailment);
  EXPECT_EQ(effective_kind(test("019"), prover::Mode::kModelfind), prover::TaskKind::kConsistency);
  EXPECT_EQ(effective_kind(test("019"), prover::Mode::kProve), prover::TaskKind::kInconsistency);
  RunConfig cfg;
  cfg.mode = prover::Mode::kModelfind;
  EXPECT_TRUE(is_excluded(test("002"), cfg));
  EXPECT_FALSE(is_excluded(test("004"), cfg));
  cfg.mode = prover::Mode::kProve;
  EXPECT_FALSE(is_excluded(test("002"), cfg));
}

TEST(FilterTest, Parse) {
  EXPECT_EQ(Filter::parse("off").kind, Filter::Kind::kOff);
  EXPECT_EQ(Filter::parse("fixpoint").hop_bound(), std::nullopt);
  EXPECT_EQ(Filter::parse("3").hop_bound(), 3u);
  EXPECT_EQ(Filter::parse("3").to_string(), "3");
  EXPECT_THROW(Filter::parse("three"), std::invalid_argument);
  EXPECT_THROW(Filter::parse("-1"), std::invalid_argument);
  EXPECT_THROW(Filter::parse(""), std::invalid_argument);
}

TEST(ProblemHeaderTest, DescribesTheRun) {
  RunConfig cfg = profile_config();
  cfg.bulk_n = 1200;
  auto lines = problem_header(test("020"), cfg);
  EXPECT_EQ(lines[1], "test: 020_Logical_Complications");
  EXPECT_EQ(lines[2], "axioms: profile owl2-full, filter fixpoint");
  EXPECT_EQ(lines[3], "bulk: 1200 triples, seed 1");
}

}  // namespace
}  // namespace owlfol::suite
