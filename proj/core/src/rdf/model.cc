// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/rdf/model.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "owlfol/rdf/ntriples.h"

namespace owlfol::rdf {

Literal Literal::plain(std::string lexical) {
  return Literal{LiteralKind::kPlain, std::move(lexical), {}, {}};
}

Literal Literal::lang_tagged(std::string lexical, std::string lang) {
  return Literal{LiteralKind::kLangTagged, std::move(lexical), std::move(lang),
                 {}};
}

Literal Literal::typed(std::string lexical, Iri datatype) {
  return Literal{LiteralKind::kTyped, std::move(lexical), {},
                 std::move(datatype)};
}

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_node(const Node& n) {
  std::hash<std::string> h;
  std::size_t seed = n.index();
  if (const auto* iri = std::get_if<Iri>(&n)) {
    hash_combine(seed, h(iri->value));
  } else if (const auto* b = std::get_if<BlankNode>(&n)) {
    hash_combine(seed, h(b->label));
  } else {
    const auto& lit = std::get<Literal>(n);
    hash_combine(seed, static_cast<std::size_t>(lit.kind));
    hash_combine(seed, h(lit.lexical));
    hash_combine(seed, h(lit.lang));
    hash_combine(seed, h(lit.datatype.value));
  }
  return seed;
}

void collect_blank(const Node& n, std::set<std::string>& out) {
  if (const auto* b = std::get_if<BlankNode>(&n)) out.insert(b->label);
}

}  // namespace

std::size_t TripleHash::operator()(const Triple& t) const {
  std::size_t seed = hash_node(t.subject);
  hash_combine(seed, std::hash<std::string>{}(t.predicate.value));
  hash_combine(seed, hash_node(t.object));
  return seed;
}

std::size_t Graph::IndexHash::operator()(std::size_t i) const {
  return TripleHash{}((*triples)[i]);
}

std::size_t Graph::IndexHash::operator()(const Triple& t) const {
  return TripleHash{}(t);
}

bool Graph::IndexEq::operator()(std::size_t a, std::size_t b) const {
  return (*triples)[a] == (*triples)[b];
}

bool Graph::IndexEq::operator()(const Triple& t, std::size_t i) const {
  return t == (*triples)[i];
}

bool Graph::IndexEq::operator()(std::size_t i, const Triple& t) const {
  return (*triples)[i] == t;
}

Graph::Graph(const Graph& other)
    : triples_(other.triples_), blank_labels_(other.blank_labels_) {
  rebuild_index();
}

Graph::Graph(Graph&& other) noexcept
    : triples_(std::move(other.triples_)),
      blank_labels_(std::move(other.blank_labels_)) {
  rebuild_index();
  other.triples_.clear();
  other.blank_labels_.clear();
  other.rebuild_index();
}

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    triples_ = other.triples_;
    blank_labels_ = other.blank_labels_;
    rebuild_index();
  }
  return *this;
}

Graph& Graph::operator=(Graph&& other) noexcept {
  if (this != &other) {
    triples_ = std::move(other.triples_);
    blank_labels_ = std::move(other.blank_labels_);
    rebuild_index();
    other.triples_.clear();
    other.blank_labels_.clear();
    other.rebuild_index();
  }
  return *this;
}

void Graph::rebuild_index() {
  index_ = Index(triples_.size(), IndexHash{&triples_}, IndexEq{&triples_});
  for (std::size_t i = 0; i < triples_.size(); ++i) index_.insert(i);
}

bool Graph::add(Triple t) {
  if (std::holds_alternative<Literal>(t.subject)) {
    throw std::invalid_argument("literal in subject position");
  }
  if (t.predicate.value.empty()) {
    throw std::invalid_argument("empty predicate IRI");
  }
  if (contains(t)) return false;
  triples_.push_back(std::move(t));
  index_.insert(triples_.size() - 1);
  collect_blank(triples_.back().subject, blank_labels_);
  collect_blank(triples_.back().object, blank_labels_);
  return true;
}

bool Graph::contains(const Triple& t) const {
  return index_.find(t) != index_.end();
}

std::vector<Triple> Graph::canonical_triples() const {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(triples_.size());
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    keyed.emplace_back(to_ntriples(triples_[i]), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Triple> out;
  out.reserve(keyed.size());
  for (const auto& [key, i] : keyed) out.push_back(triples_[i]);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (const auto& t : a.triples()) {
    if (!b.contains(t)) return false;
  }
  return true;
}

void PrefixMap::bind(std::string label, std::string ns) {
  history_.push_back(Binding{label, ns});
  bindings_[std::move(label)] = std::move(ns);
}

std::optional<std::string> PrefixMap::lookup(std::string_view label) const {
  auto it = bindings_.find(label);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

namespace {

Node rename(const Node& n, const std::map<std::string, std::string>& renames) {
  if (const auto* b = std::get_if<BlankNode>(&n)) {
    auto it = renames.find(b->label);
    if (it != renames.end()) return BlankNode{it->second};
  }
  return n;
}

}  // namespace

Graph graph_union(const Graph& a, const Graph& b) {
  std::set<std::string> taken = a.blank_labels();
  taken.insert(b.blank_labels().begin(), b.blank_labels().end());
  std::map<std::string, std::string> renames;
  for (const auto& label : b.blank_labels()) {
    if (!a.blank_labels().count(label)) continue;
    for (std::size_t k = 1;; ++k) {
      std::string candidate = label + "_" + std::to_string(k);
      if (taken.insert(candidate).second) {
        renames.emplace(label, std::move(candidate));
        break;
      }
    }
  }
  Graph out = a;
  for (const auto& t : b.triples()) {
    out.add(Triple{rename(t.subject, renames), t.predicate,
                   rename(t.object, renames)});
  }
  return out;
}

namespace {

// Backtracking search for a blank-label bijection. Candidates are pruned by
// a per-label signature built from the ground parts of incident triples.
class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  bool run() {
    if (a_.size() != b_.size()) return false;
    if (a_.blank_labels().size() != b_.blank_labels().size()) return false;
    auto sig_a = signatures(a_);
    auto sig_b = signatures(b_);
    for (const auto& l : a_.blank_labels()) labels_.push_back(l);
    for (const auto& l : labels_) {
      std::vector<std::string> cands;
      for (const auto& m : b_.blank_labels()) {
        if (sig_a[l] == sig_b[m]) cands.push_back(m);
      }
      if (cands.empty()) return false;
      candidates_[l] = std::move(cands);
    }
    std::sort(labels_.begin(), labels_.end(),
              [&](const std::string& x, const std::string& y) {
                return candidates_[x].size() < candidates_[y].size();
              });
    return search(0);
  }

 private:
  static std::map<std::string, std::multiset<std::string>> signatures(
      const Graph& g) {
    std::map<std::string, std::multiset<std::string>> sig;
    auto ground = [](const Node& n) -> std::string {
      if (std::holds_alternative<BlankNode>(n)) return "_";
      return to_ntriples_term(n);
    };
    for (const auto& t : g.triples()) {
      if (const auto* s = std::get_if<BlankNode>(&t.subject)) {
        sig[s->label].insert("s " + t.predicate.value + " " + ground(t.object));
      }
      if (const auto* o = std::get_if<BlankNode>(&t.object)) {
        sig[o->label].insert("o " + t.predicate.value + " " +
                             ground(t.subject));
      }
    }
    return sig;
  }

  bool search(std::size_t i) {
    if (i == labels_.size()) return check();
    const auto& l = labels_[i];
    for (const auto& m : candidates_[l]) {
      if (used_.count(m)) continue;
      used_.insert(m);
      mapping_[l] = m;
      if (search(i + 1)) return true;
      used_.erase(m);
      mapping_.erase(l);
    }
    return false;
  }

  bool check() const {
    for (const auto& t : a_.triples()) {
      if (!b_.contains(Triple{rename(t.subject, mapping_), t.predicate,
                              rename(t.object, mapping_)})) {
        return false;
      }
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::string> labels_;
  std::map<std::string, std::vector<std::string>> candidates_;
  std::map<std::string, std::string> mapping_;
  std::set<std::string> used_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  return IsoSearch(a, b).run();
}

}  // namespace owlfol::rdf
