// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_FOL_MANGLE_H_
#define OWLFOL_FOL_MANGLE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "owlfol/rdf/model.h"

namespace owlfol::fol {

// Keeps [A-Za-z0-9]; every other byte becomes '_' plus two lowercase hex
// digits, so the encoding is injective.
std::string escape_name(std::string_view s);

// 32-bit FNV-1a.
std::uint32_t fnv1a32(std::string_view s);

// Namespaces that are always available for mangling, ahead of document
// prefixes: rdf, rdfs, owl, xsd, ex, foaf, skos.
const std::vector<std::pair<std::string, std::string>>& builtin_namespaces();

// Maps IRIs, lexical forms and language tags to TPTP constant names. One
// instance should serve a whole problem so names stay injective across
// premise and conclusion.
class Mangler {
 public:
  Mangler() : Mangler(rdf::PrefixMap{}) {}
  explicit Mangler(const rdf::PrefixMap& prefixes);

  // `uri_<prefix>_<local>`, or `uri_x_<fnv8>` without a matching namespace.
  std::string iri(const rdf::Iri& iri);
  std::string iri(std::string_view iri);
  // `lex_<escaped lexical form>`.
  std::string lexical(std::string_view lexical);
  // `lang_<escaped lowercase tag>`.
  std::string lang(std::string_view tag);

  // Adds document prefixes that were not known at construction.
  void add_prefixes(const rdf::PrefixMap& prefixes);

 private:
  std::string base_name(std::string_view iri) const;
  std::string intern(std::string key, std::string base);

  // Namespace to label; longest namespace wins, built-ins before document
  // bindings on equal namespaces.
  std::vector<std::pair<std::string, std::string>> namespaces_;
  std::unordered_map<std::string, std::string> by_key_;
  std::unordered_map<std::string, std::string> taken_;  // name to key
};

// Mangles one IRI with a fresh Mangler over prefixes.
std::string mangle_iri(const rdf::Iri& iri, const rdf::PrefixMap& prefixes);

}  // namespace owlfol::fol

#endif  // OWLFOL_FOL_MANGLE_H_
