// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "owlfol/axioms/store.h"
#include "owlfol/fol/tptp_writer.h"
#include "owlfol/fol/translate.h"
#include "owlfol/prover/config.h"
#include "owlfol/prover/run.h"
#include "owlfol/rdf/ntriples.h"
#include "owlfol/rdf/turtle.h"
#include "owlfol/suite/bulk.h"
#include "owlfol/suite/runner.h"
#include "owlfol/suite/task.h"
#include "owlfol/version.h"

namespace owlfol::cli {

namespace {

namespace fs = std::filesystem;

// Errors that map to a specific exit code.
struct CliError : std::runtime_error {
  CliError(int code, const std::string& what)
      : std::runtime_error(what), code(code) {}
  int code;
};

[[noreturn]] void usage_error(const std::string& msg) {
  throw CliError(kExitUsage, msg);
}
[[noreturn]] void io_error(const std::string& msg) { throw CliError(kExitIo, msg); }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) io_error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) io_error("cannot read " + p.string());
  return buf.str();
}

void write_output(const std::optional<std::string>& path, std::string_view text,
                  std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) io_error("cannot write " + *path);
  f << text;
  if (!f) io_error("cannot write " + *path);
}

// Parses a Turtle or, for `.nt` files, N-Triples document.
rdf::TurtleDocument read_graph(const fs::path& p) {
  const std::string text = read_file(p);
  try {
    if (p.extension() == ".nt") return {rdf::parse_ntriples(text), {}};
    return rdf::parse_turtle_document(text);
  } catch (const rdf::ParseError& e) {
    throw CliError(kExitUsage, p.string() + ": " + e.what());
  }
}

prover::ProverConfig resolve_prover(const std::optional<std::string>& config,
                                    const std::string& id,
                                    std::optional<int> timeout) {
  std::string path;
  if (config) {
    path = *config;
  } else if (const char* env = std::getenv("OWLFOL_PROVER_CONFIG"); env && *env) {
    path = env;
  } else {
    usage_error("no prover configured; pass --config or set OWLFOL_PROVER_CONFIG");
  }
  prover::ProverConfig cfg;
  try {
    cfg = prover::load_prover_config(path, id);
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  } catch (const std::runtime_error& e) {
    io_error(e.what());
  }
  if (timeout) {
    if (*timeout <= 0) usage_error("--timeout must be positive");
    cfg.timeout_s = *timeout;
  }
  return cfg;
}

suite::Filter parse_filter(const std::string& s) {
  try {
    return suite::Filter::parse(s);
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  }
}

std::string timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

int exit_for(prover::Verdict v) {
  switch (v) {
    case prover::Verdict::kSuccess: return kExitOk;
    case prover::Verdict::kWrong: return kExitWrong;
    case prover::Verdict::kUnknown: return kExitUnknown;
  }
  return kExitUnknown;
}

struct TranslateArgs {
  std::vector<std::string> inputs;
  std::string role = "axiom";
  std::optional<std::string> name;
  std::optional<std::string> out;
};

int cmd_translate(const TranslateArgs& a, std::ostream& out) {
  if (a.role != "axiom" && a.role != "conjecture") {
    usage_error("--role must be axiom or conjecture");
  }
  const fol::Role role =
      a.role == "axiom" ? fol::Role::kAxiom : fol::Role::kConjecture;
  std::string name = a.name.value_or(
      std::string(role == fol::Role::kAxiom ? suite::kPremiseName
                                            : suite::kConclusionName));
  if (!fol::is_formula_name(name)) usage_error("illegal formula name " + name);

  rdf::Graph graph;
  rdf::PrefixMap prefixes;
  for (const std::string& input : a.inputs) {
    rdf::TurtleDocument doc = read_graph(input);
    graph = rdf::graph_union(graph, doc.graph);
    for (const auto& [label, ns] : doc.prefixes.bindings()) {
      if (!prefixes.lookup(label)) prefixes.bind(label, ns);
    }
  }
  std::string text;
  if (!graph.empty()) {
    text = fol::to_tptp(fol::translate_graph(graph, role, name, prefixes));
  }
  write_output(a.out, text, out);
  return kExitOk;
}

struct SolveArgs {
  std::string premise;
  std::optional<std::string> conclusion;
  std::optional<std::string> kind;
  std::optional<std::string> profile;
  std::optional<std::string> subset;
  std::string filter = "off";
  std::optional<std::string> config;
  std::string prover_id;
  std::optional<int> timeout;
  bool keep_artifacts = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  prover::TaskKind kind = a.conclusion ? prover::TaskKind::kPositiveEntailment
                                       : prover::TaskKind::kInconsistency;
  if (a.kind) {
    bool found = false;
    for (prover::TaskKind k : prover::kAllKinds) {
      if (*a.kind == prover::to_string(k)) {
        kind = k;
        found = true;
      }
    }
    if (!found) {
      usage_error("--kind must be entailment, inconsistency, non-entailment or consistency");
    }
  }
  const bool needs_conclusion = kind == prover::TaskKind::kPositiveEntailment ||
                                kind == prover::TaskKind::kNonEntailment;
  if (needs_conclusion != a.conclusion.has_value()) {
    usage_error(needs_conclusion ? "--kind " + std::string(prover::to_string(kind)) +
                                       " needs --conclusion"
                                 : "--conclusion is only valid for entailment kinds");
  }
  if (a.profile && a.subset) usage_error("--profile and --subset are exclusive");

  suite::RunConfig cfg;
  cfg.filter = parse_filter(a.filter);
  const axioms::AxiomStore& store = axioms::AxiomStore::builtin();
  if (a.subset) {
    cfg.selection = suite::Selection::kSubset;
    try {
      store.resolve_test_id(*a.subset);
    } catch (const std::out_of_range& e) {
      usage_error(e.what());
    }
  } else {
    cfg.selection = suite::Selection::kProfile;
    cfg.profile = a.profile.value_or(std::string(axioms::kOwl2Full));
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  }
  cfg.prover = resolve_prover(a.config, a.prover_id, a.timeout);
  cfg.mode = cfg.prover.mode;

  suite::TestCase t;
  t.id = a.subset ? store.resolve_test_id(*a.subset) : "000_Command_Line";
  t.kind = needs_conclusion ? prover::TaskKind::kPositiveEntailment
                            : prover::TaskKind::kInconsistency;
  rdf::TurtleDocument premise = read_graph(a.premise);
  t.premise = std::move(premise.graph);
  t.prefixes = std::move(premise.prefixes);
  if (a.conclusion) {
    rdf::TurtleDocument c = read_graph(*a.conclusion);
    t.conclusion = std::move(c.graph);
    for (const auto& [label, ns] : c.prefixes.bindings()) {
      if (!t.prefixes.lookup(label)) t.prefixes.bind(label, ns);
    }
  }

  const fol::Problem problem = suite::build_problem(t, cfg, store);
  prover::RunOptions options;
  if (a.keep_artifacts) options.artifact_dir = fs::path("runs") / timestamp() / t.id;
  const prover::ProverRun run = prover::run_prover(
      fol::serialize_tptp(problem, suite::problem_header(t, cfg)), cfg.prover,
      options);
  const prover::Verdict v = prover::interpret(kind, run.status);
  out << prover::glyph(v) << ' ' << prover::to_string(run.status) << ' '
      << suite::format_seconds(run.elapsed_s) << '\n';
  if (run.status == prover::SzsStatus::kError) {
    throw CliError(kExitIo, run.diagnostic.empty() ? "prover error" : run.diagnostic);
  }
  return exit_for(v);
}

struct SuiteArgs {
  std::optional<std::string> config;
  std::string prover_id;
  std::optional<std::string> profile;
  std::string filter = "off";
  std::size_t bulk = 0;
  std::uint64_t seed = 1;
  std::string out_dir = "results";
  std::size_t parallel = 1;
  std::optional<std::string> mode;
  std::optional<std::string> suite_dir;
  std::vector<std::string> tests;
  std::optional<int> timeout;
  bool keep_artifacts = false;
};

int cmd_suite(const SuiteArgs& a, std::ostream& out, std::ostream& err) {
  suite::RunConfig cfg;
  cfg.filter = parse_filter(a.filter);
  if (a.profile) {
    cfg.selection = suite::Selection::kProfile;
    cfg.profile = *a.profile;
  }
  cfg.bulk_n = a.bulk;
  cfg.bulk_seed = a.seed;
  cfg.parallelism = a.parallel;
  try {
    cfg.validate();
    if (a.mode) cfg.mode = prover::parse_mode(*a.mode);
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  }
  cfg.prover = resolve_prover(a.config, a.prover_id, a.timeout);
  if (!a.mode) cfg.mode = cfg.prover.mode;
  if (a.keep_artifacts) cfg.artifact_root = fs::path("runs") / timestamp();

  std::vector<suite::TestCase> tests;
  try {
    tests = a.suite_dir ? suite::load_suite(*a.suite_dir) : suite::builtin_suite();
  } catch (const suite::SuiteDataError& e) {
    usage_error(e.what());
  } catch (const fs::filesystem_error& e) {
    io_error(e.what());
  }
  if (!a.tests.empty()) {
    try {
      tests = suite::select_tests(tests, a.tests);
    } catch (const std::out_of_range& e) {
      usage_error(e.what());
    }
  }

  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) io_error("cannot create " + a.out_dir + ": " + ec.message());

  const suite::ResultTable table = suite::run_suite(
      tests, cfg, axioms::AxiomStore::builtin(), [&](const suite::ResultRow& r) {
        err << r.test_id << ' ' << prover::glyph(r.verdict) << ' '
            << prover::to_string(r.status) << ' '
            << suite::format_seconds(r.elapsed_s) << '\n';
      });
  const std::string md = suite::render_table(table, suite::Format::kMarkdown);
  write_output(a.out_dir + "/results.csv",
               suite::render_table(table, suite::Format::kCsv), out);
  write_output(a.out_dir + "/results.md", md, out);
  out << md;
  const suite::Summary s = table.summary();
  return s.success == s.total() ? kExitOk : kExitFailure;
}

struct BulkArgs {
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::optional<std::string> out;
};

int cmd_bulk(const BulkArgs& a, std::ostream& out) {
  if (!a.out) {
    suite::write_bulk(out, a.n, a.seed);
    return kExitOk;
  }
  std::ofstream f(*a.out, std::ios::binary);
  if (!f) io_error("cannot write " + *a.out);
  suite::write_bulk(f, a.n, a.seed);
  f.flush();
  if (!f) io_error("cannot write " + *a.out);
  return kExitOk;
}

struct AxiomsArgs {
  std::string profile = std::string(axioms::kOwl2Full);
  bool export_tptp = false;
  std::optional<std::string> out;
};

int cmd_axioms(const AxiomsArgs& a, std::ostream& out) {
  if (!axioms::is_known_profile(a.profile)) usage_error("unknown profile " + a.profile);
  const std::vector<axioms::AxiomEntry> entries =
      axioms::AxiomStore::builtin().load_profile(a.profile);
  std::string text;
  if (a.export_tptp) {
    fol::Problem p;
    for (const axioms::AxiomEntry& e : entries) p.add(e.named());
    text = fol::serialize_tptp(
        p, {"generated by owlfol " + std::string(kVersion),
            "profile: " + a.profile,
            "axioms: " + std::to_string(entries.size())});
  } else {
    for (const axioms::AxiomEntry& e : entries) {
      text += e.name + ' ' + e.feature + '\n';
    }
  }
  write_output(a.out, text, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"OWL 2 Full reasoning through first-order provers", "owlfol"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  TranslateArgs ta;
  auto* translate = app.add_subcommand("translate", "Translate RDF graphs to a TPTP formula");
  translate->add_option("inputs", ta.inputs, "Turtle (.ttl) or N-Triples (.nt) files")
      ->required();
  translate->add_option("--role", ta.role, "axiom or conjecture")->capture_default_str();
  translate->add_option("--name", ta.name, "Formula name");
  translate->add_option("--out", ta.out, "Output file (default: stdout)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Run one reasoning task");
  solve->add_option("--premise", sa.premise, "Premise graph")->required();
  solve->add_option("--conclusion", sa.conclusion, "Conclusion graph");
  solve->add_option("--kind", sa.kind,
                    "entailment, inconsistency, non-entailment or consistency");
  auto* profile_opt = solve->add_option("--profile", sa.profile, "Axiom profile");
  auto* subset_opt = solve->add_option("--subset", sa.subset, "Use the axiom subset of a test");
  profile_opt->excludes(subset_opt);
  solve->add_option("--filter", sa.filter, "off, fixpoint or a hop count")
      ->capture_default_str();
  solve->add_option("--config", sa.config, "Prover config file");
  solve->add_option("--prover", sa.prover_id, "Prover id within the config file");
  solve->add_option("--timeout", sa.timeout, "Timeout in seconds");
  solve->add_flag("--keep-artifacts", sa.keep_artifacts,
                  "Keep the problem and prover output under runs/");

  SuiteArgs su;
  auto* suite_cmd = app.add_subcommand("suite", "Run the test suite");
  suite_cmd->add_option("--config", su.config, "Prover config file");
  suite_cmd->add_option("--prover", su.prover_id, "Prover id within the config file");
  suite_cmd->add_option("--profile", su.profile, "Use a whole profile instead of subsets");
  suite_cmd->add_option("--filter", su.filter, "off, fixpoint or a hop count")
      ->capture_default_str();
  suite_cmd->add_option("--bulk", su.bulk, "Bulk triples appended to each premise")
      ->capture_default_str();
  suite_cmd->add_option("--seed", su.seed, "Bulk generator seed")->capture_default_str();
  suite_cmd->add_option("--out", su.out_dir, "Directory for results.csv and results.md")
      ->capture_default_str();
  suite_cmd->add_option("--parallel", su.parallel, "Concurrent prover processes")
      ->capture_default_str();
  suite_cmd->add_option("--mode", su.mode, "prove or modelfind (default: from config)");
  suite_cmd->add_option("--suite-dir", su.suite_dir, "Load tests from a directory");
  suite_cmd->add_option("--tests", su.tests, "Only these test ids or numbers");
  suite_cmd->add_option("--timeout", su.timeout, "Timeout in seconds");
  suite_cmd->add_flag("--keep-artifacts", su.keep_artifacts,
                      "Keep problems and prover output under runs/");

  BulkArgs ba;
  auto* bulk = app.add_subcommand("bulk", "Generate bulk N-Triples");
  bulk->add_option("--n", ba.n, "Number of triples")->required();
  bulk->add_option("--seed", ba.seed, "Generator seed")->capture_default_str();
  bulk->add_option("--out", ba.out, "Output file (default: stdout)");

  AxiomsArgs aa;
  auto* axioms_cmd = app.add_subcommand("axioms", "List or export an axiom profile");
  axioms_cmd->add_option("--profile", aa.profile, "Profile id")->capture_default_str();
  axioms_cmd->add_flag("--export", aa.export_tptp, "Write the profile as TPTP");
  axioms_cmd->add_option("--out", aa.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "owlfol: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (translate->parsed()) return cmd_translate(ta, out);
    if (solve->parsed()) return cmd_solve(sa, out);
    if (suite_cmd->parsed()) return cmd_suite(su, out, err);
    if (bulk->parsed()) return cmd_bulk(ba, out);
    if (axioms_cmd->parsed()) return cmd_axioms(aa, out);
  } catch (const CliError& e) {
    err << "owlfol: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "owlfol: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace owlfol::cli
