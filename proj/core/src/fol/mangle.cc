// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/fol/mangle.h"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace owlfol::fol {

std::string escape_name(std::string_view s) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      out += ch;
    } else {
      out += '_';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::uint32_t fnv1a32(std::string_view s) {
  std::uint32_t h = 2166136261u;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 16777619u;
  }
  return h;
}

const std::vector<std::pair<std::string, std::string>>& builtin_namespaces() {
  static const std::vector<std::pair<std::string, std::string>> kBuiltins = {
      {"rdf", std::string(rdf::kRdfNs)},
      {"rdfs", std::string(rdf::kRdfsNs)},
      {"owl", std::string(rdf::kOwlNs)},
      {"xsd", std::string(rdf::kXsdNs)},
      {"ex", "http://www.example.org/"},
      {"foaf", "http://xmlns.com/foaf/0.1/"},
      {"skos", "http://www.w3.org/2004/02/skos/core#"},
  };
  return kBuiltins;
}

Mangler::Mangler(const rdf::PrefixMap& prefixes) {
  for (const auto& [label, ns] : builtin_namespaces()) {
    namespaces_.emplace_back(ns, label);
  }
  add_prefixes(prefixes);
}

void Mangler::add_prefixes(const rdf::PrefixMap& prefixes) {
  for (const auto& [label, ns] : prefixes.bindings()) {
    if (ns.empty()) continue;
    const bool known = std::any_of(
        namespaces_.begin(), namespaces_.end(),
        [&](const auto& entry) { return entry.first == ns; });
    if (!known) namespaces_.emplace_back(ns, label);
  }
  // Stable sort keeps built-ins ahead of document labels for equal lengths.
  std::stable_sort(namespaces_.begin(), namespaces_.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() > b.first.size();
                   });
}

std::string Mangler::base_name(std::string_view iri) const {
  for (const auto& [ns, label] : namespaces_) {
    if (iri.size() >= ns.size() && iri.substr(0, ns.size()) == ns) {
      return "uri_" + escape_name(label) + "_" +
             escape_name(iri.substr(ns.size()));
    }
  }
  char hex[9];
  std::snprintf(hex, sizeof hex, "%08x", static_cast<unsigned>(fnv1a32(iri)));
  return std::string("uri_x_") + hex;
}

std::string Mangler::intern(std::string key, std::string base) {
  if (auto it = by_key_.find(key); it != by_key_.end()) return it->second;
  std::string name = base;
  for (std::size_t k = 1; taken_.count(name); ++k) {
    name = base + "_" + std::to_string(k);
  }
  taken_.emplace(name, key);
  by_key_.emplace(std::move(key), name);
  return name;
}

std::string Mangler::iri(std::string_view value) {
  return intern("i" + std::string(value), base_name(value));
}

std::string Mangler::iri(const rdf::Iri& value) { return iri(value.value); }

std::string Mangler::lexical(std::string_view lex) {
  return intern("l" + std::string(lex), "lex_" + escape_name(lex));
}

std::string Mangler::lang(std::string_view tag) {
  std::string lower(tag);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
  return intern("t" + lower, "lang_" + escape_name(lower));
}

std::string mangle_iri(const rdf::Iri& iri, const rdf::PrefixMap& prefixes) {
  return Mangler(prefixes).iri(iri);
}

}  // namespace owlfol::fol
