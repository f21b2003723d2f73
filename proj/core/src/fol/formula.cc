// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/fol/formula.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace owlfol::fol {

Term Term::constant(std::string name) {
  return Term{Kind::kConst, std::move(name), {}};
}

Term Term::var(std::string name) { return Term{Kind::kVar, std::move(name), {}}; }

Term Term::func(std::string name, std::vector<Term> args) {
  return Term{Kind::kFunc, std::move(name), std::move(args)};
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(),
                                                b.args.begin(), b.args.end());
}

Formula atom(std::string pred, std::vector<Term> args) {
  Formula f;
  f.op_ = Op::kAtom;
  f.pred_ = std::move(pred);
  f.args_ = std::move(args);
  return f;
}

Formula equal(Term lhs, Term rhs) {
  Formula f;
  f.op_ = Op::kEqual;
  f.args_ = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula neg(Formula g) {
  Formula f;
  f.op_ = Op::kNot;
  f.children_.push_back(std::move(g));
  return f;
}

Formula conj(std::vector<Formula> parts) {
  if (parts.empty()) return top();
  if (parts.size() == 1) return std::move(parts.front());
  Formula f;
  f.op_ = Op::kAnd;
  f.children_ = std::move(parts);
  return f;
}

Formula disj(std::vector<Formula> parts) {
  if (parts.empty()) return bottom();
  if (parts.size() == 1) return std::move(parts.front());
  Formula f;
  f.op_ = Op::kOr;
  f.children_ = std::move(parts);
  return f;
}

Formula implies(Formula lhs, Formula rhs) {
  Formula f;
  f.op_ = Op::kImplies;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula iff(Formula lhs, Formula rhs) {
  Formula f;
  f.op_ = Op::kIff;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  Formula f;
  f.op_ = Op::kForall;
  f.vars_ = std::move(vars);
  f.children_.push_back(std::move(body));
  return f;
}

Formula exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  Formula f;
  f.op_ = Op::kExists;
  f.vars_ = std::move(vars);
  f.children_.push_back(std::move(body));
  return f;
}

Formula top() { return Formula{}; }

Formula bottom() {
  Formula f;
  f.op_ = Op::kFalse;
  return f;
}

Formula iext(Term p, Term s, Term o) {
  return atom("iext", {std::move(p), std::move(s), std::move(o)});
}

std::optional<std::size_t> vocabulary_arity(std::string_view pred) {
  static constexpr std::array<std::pair<std::string_view, std::size_t>, 7>
      kVocabulary = {{{"iext", 3},
                      {"icext", 2},
                      {"ic", 1},
                      {"ip", 1},
                      {"ir", 1},
                      {"idc", 1},
                      {"lit", 1}}};
  for (const auto& [name, arity] : kVocabulary) {
    if (name == pred) return arity;
  }
  return std::nullopt;
}

namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool all_word_chars(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_word_char);
}

[[noreturn]] void invalid(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void validate_term(const Term& t, const std::vector<std::string>& bound) {
  switch (t.kind) {
    case Term::Kind::kVar:
      if (!is_var_name(t.name)) invalid("bad variable name '" + t.name + "'");
      if (std::find(bound.begin(), bound.end(), t.name) == bound.end()) {
        invalid("free variable " + t.name);
      }
      return;
    case Term::Kind::kConst:
      if (!is_const_name(t.name)) invalid("bad constant name '" + t.name + "'");
      return;
    case Term::Kind::kFunc:
      if (!is_const_name(t.name)) invalid("bad function name '" + t.name + "'");
      if (t.args.empty()) invalid("function " + t.name + " without arguments");
      for (const Term& a : t.args) validate_term(a, bound);
      return;
  }
}

void validate_rec(const Formula& f, std::vector<std::string>& bound) {
  switch (f.op()) {
    case Op::kAtom: {
      auto arity = vocabulary_arity(f.pred());
      if (!arity) invalid("predicate '" + f.pred() + "' is not in the vocabulary");
      if (*arity != f.args().size()) {
        invalid("predicate " + f.pred() + " expects " + std::to_string(*arity) +
                " arguments, got " + std::to_string(f.args().size()));
      }
      for (const Term& t : f.args()) validate_term(t, bound);
      return;
    }
    case Op::kEqual:
      for (const Term& t : f.args()) validate_term(t, bound);
      return;
    case Op::kTrue:
    case Op::kFalse:
      return;
    case Op::kForall:
    case Op::kExists: {
      const std::size_t mark = bound.size();
      for (const std::string& v : f.vars()) {
        if (!is_var_name(v)) invalid("bad variable name '" + v + "'");
        if (std::find(bound.begin(), bound.end(), v) != bound.end()) {
          invalid("variable " + v + " is bound twice");
        }
        bound.push_back(v);
      }
      validate_rec(f.body(), bound);
      bound.resize(mark);
      return;
    }
    default:
      for (const Formula& c : f.children()) validate_rec(c, bound);
      return;
  }
}

void term_symbols(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::kVar) return;
  out.insert(t.name);
  for (const Term& a : t.args) term_symbols(a, out);
}

void term_free(const Term& t, std::vector<std::string>& bound,
               std::set<std::string>& out) {
  if (t.kind == Term::Kind::kVar) {
    if (std::find(bound.begin(), bound.end(), t.name) == bound.end()) {
      out.insert(t.name);
    }
    return;
  }
  for (const Term& a : t.args) term_free(a, bound, out);
}

void free_rec(const Formula& f, std::vector<std::string>& bound,
              std::set<std::string>& out) {
  for (const Term& t : f.args()) term_free(t, bound, out);
  const std::size_t mark = bound.size();
  bound.insert(bound.end(), f.vars().begin(), f.vars().end());
  for (const Formula& c : f.children()) free_rec(c, bound, out);
  bound.resize(mark);
}

}  // namespace

bool is_const_name(std::string_view name) {
  return !name.empty() && name.front() >= 'a' && name.front() <= 'z' &&
         all_word_chars(name);
}

bool is_var_name(std::string_view name) {
  return !name.empty() && name.front() >= 'A' && name.front() <= 'Z' &&
         all_word_chars(name);
}

void validate(const Formula& f) {
  std::vector<std::string> bound;
  validate_rec(f, bound);
}

void collect_symbols(const Formula& f, std::set<std::string>& out) {
  for (const Term& t : f.args()) term_symbols(t, out);
  for (const Formula& c : f.children()) collect_symbols(c, out);
}

std::set<std::string> collect_symbols(const Formula& f) {
  std::set<std::string> out;
  collect_symbols(f, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  free_rec(f, bound, out);
  return out;
}

std::size_t count_atoms(const Formula& f, std::string_view pred) {
  std::size_t n = f.op() == Op::kAtom && f.pred() == pred ? 1 : 0;
  for (const Formula& c : f.children()) n += count_atoms(c, pred);
  return n;
}

std::string_view role_name(Role r) {
  return r == Role::kConjecture ? "conjecture" : "axiom";
}

bool is_formula_name(std::string_view name) { return is_const_name(name); }

void Problem::add(NamedFormula f) {
  if (!is_formula_name(f.name)) invalid("illegal formula name '" + f.name + "'");
  if (names_.count(f.name)) invalid("duplicate formula name '" + f.name + "'");
  if (f.role == Role::kConjecture) {
    if (conjecture_) invalid("problem already has a conjecture");
    conjecture_ = formulas_.size();
  }
  names_.insert(f.name);
  formulas_.push_back(std::move(f));
}

void Problem::add(std::string name, Role role, Formula f) {
  add(NamedFormula{std::move(name), role, std::move(f)});
}

bool Problem::contains(std::string_view name) const {
  return names_.find(name) != names_.end();
}

const NamedFormula* Problem::conjecture() const {
  return conjecture_ ? &formulas_[*conjecture_] : nullptr;
}

}  // namespace owlfol::fol
