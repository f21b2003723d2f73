// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_FOL_FORMULA_H_
#define OWLFOL_FOL_FORMULA_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace owlfol::fol {

// A first-order term: a constant, a variable, or a function application.
struct Term {
  enum class Kind { kConst, kVar, kFunc };

  Kind kind = Kind::kConst;
  std::string name;
  std::vector<Term> args;  // kFunc only

  static Term constant(std::string name);
  static Term var(std::string name);
  static Term func(std::string name, std::vector<Term> args);

  bool is_var() const { return kind == Kind::kVar; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

enum class Op {
  kAtom,
  kEqual,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kForall,
  kExists,
  kTrue,
  kFalse,
};

class Formula {
 public:
  Formula() = default;

  Op op() const { return op_; }
  // kAtom: predicate name; empty otherwise.
  const std::string& pred() const { return pred_; }
  // kAtom: arguments; kEqual: the two sides.
  const std::vector<Term>& args() const { return args_; }
  // kNot: 1; kAnd/kOr: n >= 0; kImplies/kIff: 2; quantifiers: 1 (the body).
  const std::vector<Formula>& children() const { return children_; }
  // kForall/kExists: bound variable names.
  const std::vector<std::string>& vars() const { return vars_; }

  const Formula& body() const { return children_.front(); }
  bool is_quantifier() const { return op_ == Op::kForall || op_ == Op::kExists; }
  bool is_binary() const { return op_ == Op::kImplies || op_ == Op::kIff; }

  friend bool operator==(const Formula&, const Formula&) = default;

  friend Formula atom(std::string pred, std::vector<Term> args);
  friend Formula equal(Term lhs, Term rhs);
  friend Formula neg(Formula f);
  friend Formula conj(std::vector<Formula> parts);
  friend Formula disj(std::vector<Formula> parts);
  friend Formula implies(Formula lhs, Formula rhs);
  friend Formula iff(Formula lhs, Formula rhs);
  friend Formula forall(std::vector<std::string> vars, Formula body);
  friend Formula exists(std::vector<std::string> vars, Formula body);
  friend Formula top();
  friend Formula bottom();

 private:
  Op op_ = Op::kTrue;
  std::string pred_;
  std::vector<Term> args_;
  std::vector<Formula> children_;
  std::vector<std::string> vars_;
};

Formula atom(std::string pred, std::vector<Term> args);
Formula equal(Term lhs, Term rhs);
Formula neg(Formula f);
// conj({}) is $true and disj({}) is $false; a single part is returned as is.
Formula conj(std::vector<Formula> parts);
Formula disj(std::vector<Formula> parts);
Formula implies(Formula lhs, Formula rhs);
Formula iff(Formula lhs, Formula rhs);
// An empty variable list returns the body unchanged.
Formula forall(std::vector<std::string> vars, Formula body);
Formula exists(std::vector<std::string> vars, Formula body);
Formula top();
Formula bottom();

Formula iext(Term p, Term s, Term o);

// Arity of a predicate in the reasoning vocabulary, or nullopt if unknown.
std::optional<std::size_t> vocabulary_arity(std::string_view pred);

bool is_const_name(std::string_view name);
bool is_var_name(std::string_view name);

// Throws std::invalid_argument when a name, arity or variable binding
// breaks the formula invariants (closed, no rebinding, fixed vocabulary).
void validate(const Formula& f);

// Constant and function names occurring in f.
std::set<std::string> collect_symbols(const Formula& f);
void collect_symbols(const Formula& f, std::set<std::string>& out);

// Variables occurring free in f.
std::set<std::string> free_variables(const Formula& f);

std::size_t count_atoms(const Formula& f, std::string_view pred);

enum class Role { kAxiom, kConjecture };

std::string_view role_name(Role r);

struct NamedFormula {
  std::string name;
  Role role = Role::kAxiom;
  Formula formula;

  friend bool operator==(const NamedFormula&, const NamedFormula&) = default;
};

bool is_formula_name(std::string_view name);

// An ordered TPTP problem with unique names and at most one conjecture.
class Problem {
 public:
  // Throws std::invalid_argument on a duplicate name, an illegal name or a
  // second conjecture.
  void add(NamedFormula f);
  void add(std::string name, Role role, Formula f);

  const std::vector<NamedFormula>& formulas() const { return formulas_; }
  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }
  bool contains(std::string_view name) const;
  const NamedFormula* conjecture() const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::vector<NamedFormula> formulas_;
  std::set<std::string, std::less<>> names_;
  std::optional<std::size_t> conjecture_;
};

}  // namespace owlfol::fol

#endif  // OWLFOL_FOL_FORMULA_H_
