// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_SUITE_TEST_CASE_H_
#define OWLFOL_SUITE_TEST_CASE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owlfol/prover/szs.h"
#include "owlfol/rdf/model.h"

namespace owlfol::suite {

// Expectation for one run mode: '+' or excluded from scoring.
enum class Expectation { kSuccess, kExcluded };

struct TestCase {
  std::string id;  // e.g. "020_Logical_Complications"
  prover::TaskKind kind = prover::TaskKind::kPositiveEntailment;
  rdf::Graph premise;
  std::optional<rdf::Graph> conclusion;  // entailment tests only
  rdf::PrefixMap prefixes;               // premise and conclusion bindings
  std::string notes;
  Expectation expected = Expectation::kSuccess;
  // Model-finding expectations against rdfs-ext (firm) and alco-full
  // (advisory).
  Expectation rdfs_expected = Expectation::kSuccess;
  Expectation alco_expected = Expectation::kSuccess;

  // Three-digit prefix of the id.
  std::string number() const { return id.substr(0, 3); }
};

class SuiteDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds a test from the meta text and Turtle documents. Throws
// SuiteDataError when the data breaks the TestCase invariants.
TestCase make_test_case(std::string_view meta, std::string_view premise_ttl,
                        std::optional<std::string_view> conclusion_ttl,
                        std::string_view origin);

// Bundled tests ordered by id.
const std::vector<TestCase>& builtin_suite();
// Reads <dir>/<NNN>/{meta,premise.ttl[,conclusion.ttl]}, ordered by id.
std::vector<TestCase> load_suite(const std::filesystem::path& dir);

// Tests whose id or three-digit prefix is in ids, keeping suite order.
// Throws std::out_of_range for an id that matches nothing.
std::vector<TestCase> select_tests(const std::vector<TestCase>& suite,
                                   const std::vector<std::string>& ids);

}  // namespace owlfol::suite

#endif  // OWLFOL_SUITE_TEST_CASE_H_
