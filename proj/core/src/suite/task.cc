// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/suite/task.h"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "owlfol/axioms/relevance.h"
#include "owlfol/fol/translate.h"
#include "owlfol/rdf/ntriples.h"
#include "owlfol/version.h"

namespace owlfol::suite {

Filter Filter::parse(std::string_view s) {
  if (s == "off") return off();
  if (s == "fixpoint") return fixpoint();
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("filter must be off, fixpoint or a hop count, got '" +
                                std::string(s) + "'");
  }
  return with_hops(k);
}

std::string Filter::to_string() const {
  switch (kind) {
    case Kind::kOff: return "off";
    case Kind::kFixpoint: return "fixpoint";
    case Kind::kHops: return std::to_string(hops);
  }
  return "off";
}

std::optional<std::size_t> Filter::hop_bound() const {
  if (kind == Kind::kHops) return hops;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (selection == Selection::kSubset && filter.kind != Filter::Kind::kOff) {
    throw std::invalid_argument("a relevance filter cannot be combined with subset mode");
  }
  if (selection == Selection::kProfile && !axioms::is_known_profile(profile)) {
    throw std::invalid_argument("unknown profile " + profile);
  }
  if (parallelism == 0) throw std::invalid_argument("parallelism must be positive");
}

prover::TaskKind effective_kind(const TestCase& t, prover::Mode mode) {
  if (mode == prover::Mode::kProve) return t.kind;
  return t.kind == prover::TaskKind::kInconsistency
             ? prover::TaskKind::kConsistency
             : prover::TaskKind::kNonEntailment;
}

bool is_excluded(const TestCase& t, const RunConfig& cfg) {
  if (cfg.mode == prover::Mode::kProve) {
    return t.expected == Expectation::kExcluded;
  }
  if (cfg.selection == Selection::kProfile && cfg.profile == axioms::kAlcoFull) {
    return t.alco_expected == Expectation::kExcluded;
  }
  return t.rdfs_expected == Expectation::kExcluded;
}

Task build_task(const TestCase& t, const RunConfig& cfg,
                const axioms::AxiomStore& store, const rdf::Graph* bulk) {
  cfg.validate();
  fol::Mangler mangler(t.prefixes);

  std::optional<fol::NamedFormula> premise;
  if (bulk && !bulk->empty()) {
    premise = fol::translate_graph(rdf::graph_union(t.premise, *bulk),
                                   fol::Role::kAxiom, std::string(kPremiseName),
                                   mangler);
  } else if (!t.premise.empty()) {
    premise = fol::translate_graph(t.premise, fol::Role::kAxiom,
                                   std::string(kPremiseName), mangler);
  }

  fol::NamedFormula conjecture{std::string(kConclusionName),
                               fol::Role::kConjecture, fol::bottom()};
  if (t.kind == prover::TaskKind::kPositiveEntailment) {
    conjecture.formula = fol::translate_graph_formula(*t.conclusion, mangler);
  }

  std::vector<axioms::AxiomEntry> selected =
      cfg.selection == Selection::kSubset ? store.get_subset(t.id)
                                          : store.load_profile(cfg.profile);
  if (cfg.filter.kind != Filter::Kind::kOff) {
    std::set<std::string> goal = fol::collect_symbols(conjecture.formula);
    if (premise) fol::collect_symbols(premise->formula, goal);
    selected = axioms::select_relevant(selected, goal, cfg.filter.hop_bound());
  }

  Task task;
  for (const axioms::AxiomEntry& e : selected) {
    task.axiom_names.push_back(e.name);
    task.problem.add(e.named());
  }
  if (premise) task.problem.add(std::move(*premise));
  task.problem.add(std::move(conjecture));
  return task;
}

namespace {

std::string graph_hash(const rdf::Graph& g) {
  std::string text;
  for (const rdf::Triple& t : g.canonical_triples()) {
    text += rdf::to_ntriples(t);
    text += '\n';
  }
  char hex[9];
  std::snprintf(hex, sizeof hex, "%08x",
                static_cast<unsigned>(fol::fnv1a32(text)));
  return hex;
}

}  // namespace

std::vector<std::string> problem_header(const TestCase& t, const RunConfig& cfg) {
  std::vector<std::string> lines;
  lines.push_back("generated by owlfol " + std::string(kVersion));
  lines.push_back("test: " + t.id);
  if (cfg.selection == Selection::kSubset) {
    lines.push_back("axioms: subset");
  } else {
    lines.push_back("axioms: profile " + cfg.profile + ", filter " +
                    cfg.filter.to_string());
  }
  if (cfg.bulk_n > 0) {
    lines.push_back("bulk: " + std::to_string(cfg.bulk_n) + " triples, seed " +
                    std::to_string(cfg.bulk_seed));
  }
  lines.push_back("premise fnv1a32: " + graph_hash(t.premise));
  if (t.conclusion) {
    lines.push_back("conclusion fnv1a32: " + graph_hash(*t.conclusion));
  }
  return lines;
}

fol::Problem build_problem(const TestCase& t, const RunConfig& cfg,
                           const axioms::AxiomStore& store,
                           const rdf::Graph* bulk) {
  return build_task(t, cfg, store, bulk).problem;
}

}  // namespace owlfol::suite
