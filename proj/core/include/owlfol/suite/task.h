// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_SUITE_TASK_H_
#define OWLFOL_SUITE_TASK_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owlfol/axioms/store.h"
#include "owlfol/fol/formula.h"
#include "owlfol/prover/config.h"
#include "owlfol/suite/test_case.h"

namespace owlfol::suite {

inline constexpr std::string_view kPremiseName = "testcase_premise";
inline constexpr std::string_view kConclusionName = "testcase_conclusion";

enum class Selection { kSubset, kProfile };

struct Filter {
  enum class Kind { kOff, kHops, kFixpoint };
  Kind kind = Kind::kOff;
  std::size_t hops = 0;

  static Filter off() { return {}; }
  static Filter fixpoint() { return {Kind::kFixpoint, 0}; }
  static Filter with_hops(std::size_t k) { return {Kind::kHops, k}; }
  // `off`, `fixpoint` or a hop count. Throws std::invalid_argument.
  static Filter parse(std::string_view s);
  std::string to_string() const;
  // Hop bound for select_relevant; nullopt means fixpoint.
  std::optional<std::size_t> hop_bound() const;
};

struct RunConfig {
  Selection selection = Selection::kSubset;
  std::string profile = "owl2-full";  // profile mode only
  Filter filter;
  std::size_t bulk_n = 0;
  std::uint64_t bulk_seed = 1;
  prover::ProverConfig prover;
  prover::Mode mode = prover::Mode::kProve;
  std::size_t parallelism = 1;
  // Keeps problems and prover output under <artifact_root>/<test id>/.
  std::optional<std::filesystem::path> artifact_root;

  // Throws std::invalid_argument for a filter in subset mode, an unknown
  // profile or zero parallelism.
  void validate() const;
};

// Entailment becomes non-entailment and inconsistency becomes consistency
// in model-finding mode.
prover::TaskKind effective_kind(const TestCase& t, prover::Mode mode);

// Whether the test is left out of scoring for this run configuration.
bool is_excluded(const TestCase& t, const RunConfig& cfg);

struct Task {
  fol::Problem problem;
  std::vector<std::string> axiom_names;
};

// Axioms (subset or profile, optionally filtered against the premise and
// conjecture symbols), then the premise built from the union with bulk,
// then the conjecture: the conclusion graph, or $false for inconsistency
// tests. An empty premise graph is omitted.
Task build_task(const TestCase& t, const RunConfig& cfg,
                const axioms::AxiomStore& store,
                const rdf::Graph* bulk = nullptr);

// Comment lines for a serialized problem: tool version, test, axiom
// selection and FNV-1a hashes of the canonical input graphs.
std::vector<std::string> problem_header(const TestCase& t, const RunConfig& cfg);

fol::Problem build_problem(const TestCase& t, const RunConfig& cfg,
                           const axioms::AxiomStore& store,
                           const rdf::Graph* bulk = nullptr);

}  // namespace owlfol::suite

#endif  // OWLFOL_SUITE_TASK_H_
