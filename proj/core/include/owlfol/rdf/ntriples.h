// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_RDF_NTRIPLES_H_
#define OWLFOL_RDF_NTRIPLES_H_

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "owlfol/rdf/model.h"
#include "owlfol/rdf/parse_error.h"

namespace owlfol::rdf {

// One N-Triples term: <iri>, _:label or a quoted literal.
std::string to_ntriples_term(const Node& n);

// One N-Triples line without the trailing newline, e.g. "<a> <b> <c> .".
std::string to_ntriples(const Triple& t);

// Canonical serialization: one line per triple, lines sorted bytewise.
std::string write_ntriples(const Graph& g);

// Streams triples from `in` one line at a time. Throws ParseError with the
// offending line number.
void read_ntriples(std::istream& in,
                   const std::function<void(Triple&&)>& sink);

Graph parse_ntriples(std::string_view text);
Graph parse_ntriples(std::istream& in);

}  // namespace owlfol::rdf

#endif  // OWLFOL_RDF_NTRIPLES_H_
