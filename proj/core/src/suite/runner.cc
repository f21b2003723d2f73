// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/suite/runner.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

#include "owlfol/fol/tptp_writer.h"
#include "owlfol/prover/run.h"
#include "owlfol/suite/bulk.h"

namespace owlfol::suite {

ResultRow run_test(const TestCase& t, const RunConfig& cfg,
                   const axioms::AxiomStore& store, const rdf::Graph* bulk,
                   const ProverFn& prover_fn) {
  ResultRow row;
  row.test_id = t.id;
  try {
    const fol::Problem problem = build_problem(t, cfg, store, bulk);
    prover::RunOptions options;
    if (cfg.artifact_root) options.artifact_dir = *cfg.artifact_root / t.id;
    const std::string text = fol::serialize_tptp(problem, problem_header(t, cfg));
    const prover::ProverRun run =
        prover_fn ? prover_fn(text, cfg.prover, options)
                  : prover::run_prover(text, cfg.prover, options);
    row.status = run.status;
    row.elapsed_s = run.elapsed_s;
    row.diagnostic = run.diagnostic;
  } catch (const std::exception& e) {
    row.status = prover::SzsStatus::kError;
    row.diagnostic = e.what();
  }
  row.verdict = prover::interpret(effective_kind(t, cfg.mode), row.status);
  return row;
}

ResultTable run_suite(const std::vector<TestCase>& tests, const RunConfig& cfg,
                      const axioms::AxiomStore& store,
                      const ProgressFn& progress,
                      const ProverFn& prover_fn) {
  cfg.validate();
  ResultTable table;
  std::vector<const TestCase*> todo;
  for (const TestCase& t : tests) {
    if (is_excluded(t, cfg)) {
      table.excluded.push_back(t.id);
    } else {
      todo.push_back(&t);
    }
  }
  std::sort(table.excluded.begin(), table.excluded.end());

  std::optional<rdf::Graph> bulk;
  if (cfg.bulk_n > 0) bulk = gen_bulk(cfg.bulk_n, cfg.bulk_seed);
  const rdf::Graph* bulk_ptr = bulk ? &*bulk : nullptr;

  table.rows.resize(todo.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      table.rows[i] = run_test(*todo[i], cfg, store, bulk_ptr, prover_fn);
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mu);
        progress(table.rows[i]);
      }
    }
  };
  const std::size_t n_threads = std::min(cfg.parallelism, todo.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ResultRow& a, const ResultRow& b) { return a.test_id < b.test_id; });
  return table;
}

}  // namespace owlfol::suite
