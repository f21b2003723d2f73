// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_FOL_TRANSLATE_H_
#define OWLFOL_FOL_TRANSLATE_H_

#include <string>

#include "owlfol/fol/formula.h"
#include "owlfol/fol/mangle.h"
#include "owlfol/rdf/model.h"

namespace owlfol::fol {

// `B_<escaped label>`.
std::string blank_variable(const rdf::BlankNode& b);

Term translate_node(const rdf::Node& n, Mangler& m);

// One iext atom per triple in canonical order, under a single existential
// that binds every blank node. The empty graph translates to $true.
Formula translate_graph_formula(const rdf::Graph& g, Mangler& m);

NamedFormula translate_graph(const rdf::Graph& g, Role role, std::string name,
                             Mangler& m);
NamedFormula translate_graph(const rdf::Graph& g, Role role, std::string name,
                             const rdf::PrefixMap& prefixes = {});

}  // namespace owlfol::fol

#endif  // OWLFOL_FOL_TRANSLATE_H_
