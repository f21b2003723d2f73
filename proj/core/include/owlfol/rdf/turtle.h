// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_RDF_TURTLE_H_
#define OWLFOL_RDF_TURTLE_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "owlfol/rdf/model.h"
#include "owlfol/rdf/parse_error.h"

namespace owlfol::rdf {

struct TurtleDocument {
  Graph graph;
  PrefixMap prefixes;
};

// Parses the Turtle subset: @prefix/@base, `a`, predicate and object lists,
// blank node property lists, collections and quoted literals. Unquoted
// numbers and booleans are rejected. Anonymous blank nodes get labels
// "gen0", "gen1", ... skipping labels the document uses explicitly.
TurtleDocument parse_turtle_document(std::string_view text,
                                     std::optional<std::string> base = {});

Graph parse_turtle(std::string_view text,
                   std::optional<std::string> base = {});
Graph parse_turtle(std::istream& in, std::optional<std::string> base = {});

}  // namespace owlfol::rdf

#endif  // OWLFOL_RDF_TURTLE_H_
