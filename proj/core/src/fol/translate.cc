// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/fol/translate.h"

#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace owlfol::fol {

std::string blank_variable(const rdf::BlankNode& b) {
  return "B_" + escape_name(b.label);
}

Term translate_node(const rdf::Node& n, Mangler& m) {
  if (const auto* iri = std::get_if<rdf::Iri>(&n)) {
    return Term::constant(m.iri(*iri));
  }
  if (const auto* b = std::get_if<rdf::BlankNode>(&n)) {
    return Term::var(blank_variable(*b));
  }
  const auto& lit = std::get<rdf::Literal>(n);
  Term lex = Term::constant(m.lexical(lit.lexical));
  switch (lit.kind) {
    case rdf::LiteralKind::kPlain:
      return Term::func("literal_plain", {std::move(lex)});
    case rdf::LiteralKind::kLangTagged:
      return Term::func("literal_lang",
                        {std::move(lex), Term::constant(m.lang(lit.lang))});
    case rdf::LiteralKind::kTyped:
      return Term::func("literal_typed",
                        {std::move(lex), Term::constant(m.iri(lit.datatype))});
  }
  return lex;
}

Formula translate_graph_formula(const rdf::Graph& g, Mangler& m) {
  std::vector<Formula> atoms;
  std::vector<std::string> vars;
  std::unordered_set<std::string> seen;
  auto note = [&](const rdf::Node& n) {
    if (const auto* b = std::get_if<rdf::BlankNode>(&n)) {
      std::string v = blank_variable(*b);
      if (seen.insert(v).second) vars.push_back(std::move(v));
    }
  };
  const std::vector<rdf::Triple> triples = g.canonical_triples();
  atoms.reserve(triples.size());
  for (const rdf::Triple& t : triples) {
    note(t.subject);
    note(t.object);
    Term p = Term::constant(m.iri(t.predicate));
    Term s = translate_node(t.subject, m);
    Term o = translate_node(t.object, m);
    atoms.push_back(iext(std::move(p), std::move(s), std::move(o)));
  }
  return exists(std::move(vars), conj(std::move(atoms)));
}

NamedFormula translate_graph(const rdf::Graph& g, Role role, std::string name,
                             Mangler& m) {
  return NamedFormula{std::move(name), role, translate_graph_formula(g, m)};
}

NamedFormula translate_graph(const rdf::Graph& g, Role role, std::string name,
                             const rdf::PrefixMap& prefixes) {
  Mangler m(prefixes);
  return translate_graph(g, role, std::move(name), m);
}

}  // namespace owlfol::fol
