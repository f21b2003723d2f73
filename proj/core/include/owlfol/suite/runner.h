// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_SUITE_RUNNER_H_
#define OWLFOL_SUITE_RUNNER_H_

#include <functional>
#include <string_view>
#include <vector>

#include "owlfol/axioms/store.h"
#include "owlfol/prover/run.h"
#include "owlfol/suite/report.h"
#include "owlfol/suite/task.h"
#include "owlfol/suite/test_case.h"

namespace owlfol::suite {

// Called after each finished row; calls are serialized.
using ProgressFn = std::function<void(const ResultRow&)>;

// Backend that runs one serialized problem; run_prover by default.
using ProverFn = std::function<prover::ProverRun(
    std::string_view, const prover::ProverConfig&, const prover::RunOptions&)>;

// Runs every non-excluded test with up to cfg.parallelism concurrent prover
// processes. Failures become '?' rows; the suite never aborts part-way.
// Throws std::invalid_argument only when cfg itself is invalid.
ResultTable run_suite(const std::vector<TestCase>& tests, const RunConfig& cfg,
                      const axioms::AxiomStore& store = axioms::AxiomStore::builtin(),
                      const ProgressFn& progress = {},
                      const ProverFn& prover_fn = {});

// One test, with the bulk graph already generated when bulk_n > 0.
ResultRow run_test(const TestCase& t, const RunConfig& cfg,
                   const axioms::AxiomStore& store, const rdf::Graph* bulk,
                   const ProverFn& prover_fn = {});

}  // namespace owlfol::suite

#endif  // OWLFOL_SUITE_RUNNER_H_
