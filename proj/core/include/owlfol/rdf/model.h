// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_RDF_MODEL_H_
#define OWLFOL_RDF_MODEL_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

namespace owlfol::rdf {

inline constexpr std::string_view kRdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

struct Iri {
  std::string value;
  auto operator<=>(const Iri&) const = default;
};

struct BlankNode {
  std::string label;
  auto operator<=>(const BlankNode&) const = default;
};

enum class LiteralKind { kPlain, kLangTagged, kTyped };

// `lang` is non-empty iff kind is kLangTagged, `datatype` iff kTyped.
struct Literal {
  LiteralKind kind = LiteralKind::kPlain;
  std::string lexical;
  std::string lang;
  Iri datatype;

  static Literal plain(std::string lexical);
  static Literal lang_tagged(std::string lexical, std::string lang);
  static Literal typed(std::string lexical, Iri datatype);

  auto operator<=>(const Literal&) const = default;
};

using Node = std::variant<Iri, BlankNode, Literal>;

struct Triple {
  Node subject;
  Iri predicate;
  Node object;
  auto operator<=>(const Triple&) const = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const;
};

// A set of triples that keeps insertion order. Subjects must be IRIs or
// blank nodes.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph& other);
  Graph(Graph&& other) noexcept;
  Graph& operator=(const Graph& other);
  Graph& operator=(Graph&& other) noexcept;

  // Returns false when the triple is already present. Throws
  // std::invalid_argument for a literal subject.
  bool add(Triple t);
  bool contains(const Triple& t) const;

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const std::set<std::string>& blank_labels() const { return blank_labels_; }

  // Triples sorted by their N-Triples line.
  std::vector<Triple> canonical_triples() const;

  // Exact set equality, including blank labels.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  // The index stores positions into triples_ and supports lookup by value.
  struct IndexHash {
    using is_transparent = void;
    const std::vector<Triple>* triples;
    std::size_t operator()(std::size_t i) const;
    std::size_t operator()(const Triple& t) const;
  };
  struct IndexEq {
    using is_transparent = void;
    const std::vector<Triple>* triples;
    bool operator()(std::size_t a, std::size_t b) const;
    bool operator()(const Triple& t, std::size_t i) const;
    bool operator()(std::size_t i, const Triple& t) const;
  };
  using Index = std::unordered_set<std::size_t, IndexHash, IndexEq>;

  void rebuild_index();

  std::vector<Triple> triples_;
  Index index_{0, IndexHash{&triples_}, IndexEq{&triples_}};
  std::set<std::string> blank_labels_;
};

// Prefix bindings of one document. Rebinding a label replaces the earlier
// namespace; every binding event is kept in `history`.
class PrefixMap {
 public:
  struct Binding {
    std::string label;
    std::string ns;
  };

  void bind(std::string label, std::string ns);
  std::optional<std::string> lookup(std::string_view label) const;
  const std::map<std::string, std::string, std::less<>>& bindings() const {
    return bindings_;
  }
  const std::vector<Binding>& history() const { return history_; }

  std::optional<std::string> base;

 private:
  std::map<std::string, std::string, std::less<>> bindings_;
  std::vector<Binding> history_;
};

// Set union where blank labels of `b` that clash with labels of `a` are
// renamed to `<label>_<k>` with the smallest free k.
Graph graph_union(const Graph& a, const Graph& b);

// True when the graphs are equal up to a bijection between blank labels.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace owlfol::rdf

#endif  // OWLFOL_RDF_MODEL_H_
