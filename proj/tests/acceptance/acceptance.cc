// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
//
// Prover configs: $OWLFOL_PROVER_CONFIG (default provers/z3.cfg) and
// $OWLFOL_MODELFIND_CONFIG (default provers/mace.cfg).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "owlfol/axioms/relevance.h"
#include "owlfol/axioms/store.h"
#include "owlfol/fol/tptp_reader.h"
#include "owlfol/fol/tptp_writer.h"
#include "owlfol/fol/translate.h"
#include "owlfol/prover/config.h"
#include "owlfol/prover/run.h"
#include "owlfol/prover/szs.h"
#include "owlfol/suite/bulk.h"
#include "owlfol/suite/report.h"
#include "owlfol/suite/runner.h"
#include "owlfol/suite/task.h"
#include "owlfol/suite/test_case.h"
#include "test_support.h"

#ifdef OWLFOL_HAVE_CLI
#include "cli.h"
#endif

namespace owlfol::acceptance {
namespace {

// Pinned limits.
constexpr double kGoldenMaxSeconds = 1.0;
constexpr int kProverTimeoutS = 300;
constexpr std::size_t kProfileMinSuccess = 23;
constexpr int kRdfsModelTimeoutS = 60;
constexpr int kAlcoModelTimeoutS = 300;
constexpr std::size_t kRdfsModeSuccess = 29;
constexpr double kBulkNeutralityMaxSeconds = 30.0;
constexpr std::size_t kBulkLines = 1000000;
constexpr std::size_t kRandomCases = 10000;
constexpr std::size_t kRandomMaxTriples = 200;
constexpr std::size_t kRandomMaxBlanks = 50;
constexpr double kRandomMaxSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string env_or(const char* name, std::string_view fallback) {
  const char* v = std::getenv(name);
  if (v && *v) return v;
  return testing::source_path(fallback).string();
}

prover::ProverConfig prover_config(const char* env, std::string_view fallback) {
  return prover::load_prover_config(env_or(env, fallback));
}

std::size_t parallelism() {
  return std::max(1u, std::thread::hardware_concurrency());
}

void log_rows(const suite::ResultTable& t) {
  std::cerr << suite::render_table(t, suite::Format::kMarkdown);
}

Outcome golden_translation() {
  const auto start = Clock::now();
#ifdef OWLFOL_HAVE_CLI
  std::ostringstream out, err;
  const int code = cli::run_cli(
      {"translate", testing::source_path("suite/020/premise.ttl").string(), "--role", "axiom"},
      out, err);
  if (code != cli::kExitOk) return {false, "translate exited " + std::to_string(code)};
  const std::string text = out.str();
#else
  rdf::TurtleDocument d = rdf::parse_turtle_document(
      testing::read_file(testing::source_path("suite/020/premise.ttl")));
  const std::string text = fol::to_tptp(
      fol::translate_graph(d.graph, fol::Role::kAxiom, "testcase_premise", d.prefixes));
#endif
  const double secs = since(start);
  const fol::Formula ours = fol::parse_problem(text).formulas().front().formula;
  const fol::Formula ref =
      fol::parse_problem(testing::read_file(testing::data_path("c1_premise.p")))
          .formulas()
          .front()
          .formula;
  const std::size_t atoms = fol::count_atoms(ours, "iext");
  const std::size_t vars = ours.op() == fol::Op::kExists ? ours.vars().size() : 0;
  const bool equivalent = testing::alpha_normal_form(ours) == testing::alpha_normal_form(ref);
  std::ostringstream d;
  d << atoms << " atoms, " << vars << " variables, alpha-equivalent " << equivalent << ", "
    << secs << " s";
  return {equivalent && atoms == 15 && vars == 7 && secs < kGoldenMaxSeconds, d.str()};
}

Outcome suite_integrity() {
  const auto& s = suite::builtin_suite();
  std::size_t entail = 0;
  std::set<std::string> inc;
  for (const auto& t : s) {
    if (t.kind == prover::TaskKind::kPositiveEntailment) ++entail;
    if (t.kind == prover::TaskKind::kInconsistency) inc.insert(t.number());
  }
  const bool ok = s.size() == 32 && entail == 28 &&
                  inc == std::set<std::string>{"011", "019", "030", "031"};
  std::ostringstream d;
  d << s.size() << " tests, " << entail << " entailment, " << inc.size() << " inconsistency";
  return {ok, d.str()};
}

Outcome subset_mode() {
  suite::RunConfig cfg;
  cfg.prover = prover_config("OWLFOL_PROVER_CONFIG", "provers/z3.cfg");
  cfg.prover.timeout_s = kProverTimeoutS;
  cfg.mode = prover::Mode::kProve;
  cfg.parallelism = parallelism();
  const suite::ResultTable t = suite::run_suite(suite::builtin_suite(), cfg);
  log_rows(t);
  const suite::Summary s = t.summary();
  bool in_time = true;
  for (const auto& r : t.rows) in_time = in_time && r.elapsed_s < kProverTimeoutS;
  std::ostringstream d;
  d << cfg.prover.id << ": Success " << s.success << ", Wrong " << s.wrong << ", Unknown "
    << s.unknown;
  return {s.success == 32 && t.rows.size() == 32 && in_time, d.str()};
}

Outcome profile_mode() {
  suite::RunConfig cfg;
  cfg.selection = suite::Selection::kProfile;
  cfg.profile = std::string(axioms::kOwl2Full);
  cfg.prover = prover_config("OWLFOL_PROVER_CONFIG", "provers/z3.cfg");
  cfg.prover.timeout_s = kProverTimeoutS;
  cfg.mode = prover::Mode::kProve;
  cfg.parallelism = parallelism();
  const suite::ResultTable t = suite::run_suite(suite::builtin_suite(), cfg);
  log_rows(t);
  const suite::Summary s = t.summary();
  std::ostringstream d;
  d << cfg.prover.id << ": Success " << s.success << " (need " << kProfileMinSuccess
    << "), Wrong " << s.wrong << ", Unknown " << s.unknown;
  return {s.success >= kProfileMinSuccess && s.wrong == 0, d.str()};
}

prover::ProverRun model_of_profile(std::string_view profile, int timeout_s) {
  fol::Problem p;
  for (const auto& e : axioms::AxiomStore::builtin().load_profile(profile)) p.add(e.named());
  prover::ProverConfig cfg = prover_config("OWLFOL_MODELFIND_CONFIG", "provers/mace.cfg");
  cfg.timeout_s = timeout_s;
  return prover::run_prover(fol::serialize_tptp(p, {"profile " + std::string(profile)}), cfg);
}

Outcome model_finding() {
  const prover::ProverRun rdfs = model_of_profile(axioms::kRdfsExt, kRdfsModelTimeoutS);
  const prover::ProverRun alco = model_of_profile(axioms::kAlcoFull, kAlcoModelTimeoutS);
  const bool rdfs_ok = rdfs.status == prover::SzsStatus::kSatisfiable &&
                       rdfs.elapsed_s < kRdfsModelTimeoutS;
  const bool alco_ok = alco.status == prover::SzsStatus::kSatisfiable &&
                       alco.elapsed_s < kAlcoModelTimeoutS;

  suite::RunConfig cfg;
  cfg.selection = suite::Selection::kProfile;
  cfg.profile = std::string(axioms::kRdfsExt);
  cfg.mode = prover::Mode::kModelfind;
  cfg.prover = prover_config("OWLFOL_MODELFIND_CONFIG", "provers/mace.cfg");
  cfg.prover.timeout_s = kProverTimeoutS;
  cfg.parallelism = parallelism();
  const suite::ResultTable t = suite::run_suite(suite::builtin_suite(), cfg);
  log_rows(t);
  const bool excluded_ok =
      t.excluded == std::vector<std::string>{"001_Subgraph_Entailment",
                                             "002_Existential_Blank_Nodes",
                                             "003_Blank_Nodes_for_Literals"};
  const std::size_t success = t.summary().success;
  std::ostringstream d;
  d << "rdfs-ext " << prover::to_string(rdfs.status) << " " << suite::format_seconds(rdfs.elapsed_s)
    << " s, alco-full " << prover::to_string(alco.status) << " "
    << suite::format_seconds(alco.elapsed_s) << " s, RDFS mode " << success << "/"
    << kRdfsModeSuccess << " '+'";
  return {rdfs_ok && alco_ok && excluded_ok && success == kRdfsModeSuccess, d.str()};
}

std::set<std::string> fixpoint_names(const suite::TestCase& t, const rdf::Graph* bulk) {
  suite::RunConfig cfg;
  cfg.selection = suite::Selection::kProfile;
  cfg.profile = std::string(axioms::kOwl2Full);
  cfg.filter = suite::Filter::fixpoint();
  cfg.bulk_n = bulk ? bulk->size() : 0;
  const auto names = suite::build_task(t, cfg, axioms::AxiomStore::builtin(), bulk).axiom_names;
  return {names.begin(), names.end()};
}

Outcome bulk_neutrality() {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  for (std::size_t n : {1200u, 10000u}) {
    const rdf::Graph bulk = suite::gen_bulk(n, 1);
    for (const auto& t : suite::builtin_suite()) {
      if (fixpoint_names(t, &bulk) != fixpoint_names(t, nullptr)) ++mismatches;
    }
  }
  const double secs = since(start);
  std::ostringstream d;
  d << mismatches << " mismatching selections, " << secs << " s";
  return {mismatches == 0 && secs < kBulkNeutralityMaxSeconds, d.str()};
}

Outcome bulk_generation() {
  testing::TempDir dir;
  const auto path = dir / "bulk.nt";
#ifdef OWLFOL_HAVE_CLI
  std::ostringstream out, err;
  const int code = cli::run_cli(
      {"bulk", "--n", std::to_string(kBulkLines), "--seed", "1", "--out", path.string()}, out,
      err);
  if (code != cli::kExitOk) return {false, "bulk exited " + std::to_string(code)};
#else
  {
    std::ofstream f(path);
    suite::write_bulk(f, kBulkLines, 1);
  }
#endif
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0, vocabulary = 0;
  const std::string_view namespaces[] = {rdf::kRdfNs, rdf::kRdfsNs, rdf::kOwlNs, rdf::kXsdNs};
  while (std::getline(in, line)) {
    ++lines;
    for (std::string_view ns : namespaces) {
      if (line.find(ns) != std::string::npos) ++vocabulary;
    }
  }
  std::ostringstream d;
  d << lines << " lines, " << vocabulary << " vocabulary occurrences";
  return {lines == kBulkLines && vocabulary == 0, d.str()};
}

Outcome translation_properties() {
  const auto start = Clock::now();
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; seed < kRandomCases; ++seed) {
    const rdf::Graph g = testing::random_graph(seed, kRandomMaxTriples, kRandomMaxBlanks);
    fol::Problem p1, p2;
    p1.add(fol::translate_graph(g, fol::Role::kAxiom, "g"));
    p2.add(fol::translate_graph(g, fol::Role::kAxiom, "g"));
    const fol::Formula& f = p1.formulas().front().formula;
    const std::size_t vars = f.op() == fol::Op::kExists ? f.vars().size() : 0;
    if (fol::count_atoms(f, "iext") != g.size() || vars != g.blank_labels().size() ||
        fol::serialize_tptp(p1) != fol::serialize_tptp(p2)) {
      ++failures;
    }
  }
  const double secs = since(start);
  std::ostringstream d;
  d << kRandomCases << " cases, " << failures << " failures, " << secs << " s";
  return {failures == 0 && secs < kRandomMaxSeconds, d.str()};
}

Outcome verdict_table() {
  using K = prover::TaskKind;
  using S = prover::SzsStatus;
  // Columns follow kAllStatuses: Theorem, Unsatisfiable, CounterSatisfiable,
  // Satisfiable, Timeout, GaveUp, Error, Unknown.
  const std::pair<K, std::string_view> rows[] = {
      {K::kPositiveEntailment, "++--????"},
      {K::kInconsistency, "++--????"},
      {K::kNonEntailment, "--++????"},
      {K::kConsistency, "--++????"},
  };
  std::size_t cells = 0, mismatches = 0;
  for (const auto& [kind, expected] : rows) {
    for (std::size_t i = 0; i < prover::kAllStatuses.size(); ++i) {
      ++cells;
      const S status = prover::kAllStatuses[i];
      if (prover::glyph(prover::interpret(kind, status)) != expected[i]) ++mismatches;
    }
  }
  std::ostringstream d;
  d << cells << " cells, " << mismatches << " mismatches";
  return {cells == 32 && mismatches == 0, d.str()};
}

int run_all() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden translation", golden_translation},
      {"suite integrity", suite_integrity},
      {"prover subset mode", subset_mode},
      {"prover profile mode", profile_mode},
      {"model finding", model_finding},
      {"bulk neutrality", bulk_neutrality},
      {"bulk generation", bulk_generation},
      {"translation properties", translation_properties},
      {"verdict table", verdict_table},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace owlfol::acceptance

int main() { return owlfol::acceptance::run_all(); }
