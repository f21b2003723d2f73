// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_RDF_IRI_H_
#define OWLFOL_RDF_IRI_H_

#include <string>
#include <string_view>

namespace owlfol::rdf {

// True when `iri` starts with a scheme such as "http:".
bool has_scheme(std::string_view iri);

// Reference resolution against an absolute base (RFC 3986, section 5.2).
std::string resolve_iri(std::string_view base, std::string_view ref);

}  // namespace owlfol::rdf

#endif  // OWLFOL_RDF_IRI_H_
