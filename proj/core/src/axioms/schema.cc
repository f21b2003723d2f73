// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/axioms/schema.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace owlfol::axioms {

namespace {

using fol::Formula;
using fol::Term;

Term c(const char* name) { return Term::constant(name); }
Term v(const std::string& name) { return Term::var(name); }
std::string idx(const char* stem, std::size_t i) {
  return stem + std::to_string(i);
}

// Quantified variables [Head, S1, I1, ..., Sn, In] and the rdf:first/rdf:rest
// guard describing the list S1 = (I1 ... In).
struct ListShape {
  std::vector<std::string> vars;
  Formula guard;
};

ListShape list_shape(const char* head, const char* item, std::size_t n) {
  ListShape shape;
  shape.vars.push_back(head);
  std::vector<Formula> parts;
  for (std::size_t i = 1; i <= n; ++i) {
    shape.vars.push_back(idx("S", i));
    shape.vars.push_back(idx(item, i));
    parts.push_back(fol::iext(c("uri_rdf_first"), v(idx("S", i)), v(idx(item, i))));
    parts.push_back(fol::iext(c("uri_rdf_rest"), v(idx("S", i)),
                              i == n ? c("uri_rdf_nil") : v(idx("S", i + 1))));
  }
  shape.guard = fol::conj(std::move(parts));
  return shape;
}

Formula boolean(const char* property, std::size_t n, bool intersection) {
  ListShape shape = list_shape("Z", "C", n);
  std::vector<Formula> classes{fol::atom("ic", {v("Z")})};
  std::vector<Formula> members;
  for (std::size_t i = 1; i <= n; ++i) {
    classes.push_back(fol::atom("ic", {v(idx("C", i))}));
    members.push_back(fol::atom("icext", {v(idx("C", i)), v("X")}));
  }
  Formula ext = fol::iff(fol::atom("icext", {v("Z"), v("X")}),
                         intersection ? fol::conj(std::move(members))
                                      : fol::disj(std::move(members)));
  classes.push_back(fol::forall({"X"}, std::move(ext)));
  return fol::forall(
      shape.vars,
      fol::implies(shape.guard,
                   fol::iff(fol::iext(c(property), v("Z"), v("S1")),
                            fol::conj(std::move(classes)))));
}

Formula one_of(std::size_t n) {
  ListShape shape = list_shape("Z", "A", n);
  std::vector<Formula> alternatives;
  for (std::size_t i = 1; i <= n; ++i) {
    alternatives.push_back(fol::equal(v("X"), v(idx("A", i))));
  }
  Formula ext = fol::forall(
      {"X"}, fol::iff(fol::atom("icext", {v("Z"), v("X")}),
                      fol::disj(std::move(alternatives))));
  return fol::forall(
      shape.vars,
      fol::implies(shape.guard,
                   fol::iff(fol::iext(c("uri_owl_oneOf"), v("Z"), v("S1")),
                            fol::conj({fol::atom("ic", {v("Z")}),
                                       std::move(ext)}))));
}

Formula chain(std::size_t n) {
  ListShape shape = list_shape("P", "P", n);
  std::vector<Formula> props{fol::atom("ip", {v("P")})};
  std::vector<Formula> steps;
  std::vector<std::string> ys;
  for (std::size_t i = 0; i <= n; ++i) ys.push_back(idx("Y", i));
  for (std::size_t i = 1; i <= n; ++i) {
    props.push_back(fol::atom("ip", {v(idx("P", i))}));
    steps.push_back(fol::iext(v(idx("P", i)), v(ys[i - 1]), v(ys[i])));
  }
  props.push_back(fol::forall(
      ys, fol::implies(fol::conj(std::move(steps)),
                       fol::iext(v("P"), v(ys.front()), v(ys.back())))));
  return fol::forall(
      shape.vars,
      fol::implies(
          shape.guard,
          fol::iff(fol::iext(c("uri_owl_propertyChainAxiom"), v("P"), v("S1")),
                   fol::conj(std::move(props)))));
}

Formula all_different(std::size_t n) {
  ListShape shape = list_shape("Z", "A", n);
  std::vector<Formula> distinct;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      distinct.push_back(
          fol::neg(fol::equal(v(idx("A", i)), v(idx("A", j)))));
    }
  }
  Formula typed = fol::conj(
      {fol::atom("icext", {c("uri_owl_AllDifferent"), v("Z")}),
       fol::iext(c("uri_owl_members"), v("Z"), v("S1"))});
  return fol::forall(
      shape.vars,
      fol::implies(shape.guard,
                   fol::implies(std::move(typed), fol::conj(std::move(distinct)))));
}

}  // namespace

const std::vector<std::string_view>& schema_features() {
  static const std::vector<std::string_view> kFeatures = {
      "bool.intersectionOf", "bool.unionOf", "enum.oneOf",
      "chain.propertyChainAxiom", "eqdis.allDifferent"};
  return kFeatures;
}

bool is_schema_feature(std::string_view feature) {
  const auto& f = schema_features();
  return std::find(f.begin(), f.end(), feature) != f.end();
}

fol::Formula schema_instance(std::string_view feature, std::size_t arity) {
  if (!is_schema_feature(feature)) {
    throw std::invalid_argument("feature " + std::string(feature) +
                                " is not size-parameterized");
  }
  if (arity < 1 || arity > kMaxSchemaArity) {
    throw std::invalid_argument("schema arity must be in 1..3, got " +
                                std::to_string(arity));
  }
  if (feature == "bool.intersectionOf") {
    return boolean("uri_owl_intersectionOf", arity, true);
  }
  if (feature == "bool.unionOf") return boolean("uri_owl_unionOf", arity, false);
  if (feature == "enum.oneOf") return one_of(arity);
  if (feature == "chain.propertyChainAxiom") return chain(arity);
  return all_different(arity);
}

std::vector<fol::Formula> instantiate_schema(std::string_view feature,
                                             std::size_t arity) {
  fol::Formula last = schema_instance(feature, arity);
  std::vector<fol::Formula> out;
  for (std::size_t n = 1; n < arity; ++n) {
    out.push_back(schema_instance(feature, n));
  }
  out.push_back(std::move(last));
  return out;
}

std::string schema_entry_name(std::string_view feature, std::size_t arity) {
  std::string stem;
  if (feature == "bool.intersectionOf") stem = "owl_bool_intersectionof_class_";
  else if (feature == "bool.unionOf") stem = "owl_bool_unionof_class_";
  else if (feature == "enum.oneOf") stem = "owl_enum_oneof_class_";
  else if (feature == "chain.propertyChainAxiom") stem = "owl_chain_propertychainaxiom_";
  else if (feature == "eqdis.allDifferent") stem = "owl_eqdis_alldifferent_";
  else throw std::invalid_argument("feature " + std::string(feature) +
                                   " is not size-parameterized");
  return stem + "00" + std::to_string(arity);
}

}  // namespace owlfol::axioms
