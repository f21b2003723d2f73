// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/fol/tptp_writer.h"

#include <stdexcept>

namespace owlfol::fol {

namespace {

// Operands that never need parentheses under a connective.
bool is_primitive(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom:
    case Op::kEqual:
    case Op::kTrue:
    case Op::kFalse:
      return true;
    case Op::kNot:
      return f.body().op() == Op::kAtom || f.body().op() == Op::kEqual ||
             f.body().op() == Op::kTrue || f.body().op() == Op::kFalse;
    default:
      return false;
  }
}

std::string_view connective(Op op) {
  switch (op) {
    case Op::kAnd: return "&";
    case Op::kOr: return "|";
    case Op::kImplies: return "=>";
    case Op::kIff: return "<=>";
    default: return "";
  }
}

std::string quantifier_head(const Formula& f) {
  std::string out = f.op() == Op::kForall ? "! [" : "? [";
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    if (i) out += ", ";
    out += f.vars()[i];
  }
  out += "] : (";
  return out;
}

std::string operand_flat(const Formula& f) {
  return is_primitive(f) ? to_tptp(f) : "( " + to_tptp(f) + " )";
}

class Pretty {
 public:
  std::string out;

  void formula(const Formula& f, std::size_t indent) {
    std::string flat = to_tptp(f);
    if (indent + flat.size() <= kTptpLineWidth) {
      out += flat;
      return;
    }
    switch (f.op()) {
      case Op::kForall:
      case Op::kExists:
        out += quantifier_head(f);
        newline(indent + 4);
        formula(f.body(), indent + 4);
        out += " )";
        return;
      case Op::kAnd:
      case Op::kOr: {
        const std::string_view c = connective(f.op());
        for (std::size_t i = 0; i < f.children().size(); ++i) {
          if (i) {
            newline(indent);
            out += c;
            out += ' ';
          } else {
            out.append(c.size() + 1, ' ');
          }
          operand(f.children()[i], indent + c.size() + 1);
        }
        return;
      }
      case Op::kImplies:
      case Op::kIff: {
        const std::string_view c = connective(f.op());
        operand(f.children()[0], indent);
        newline(indent);
        out += c;
        out += ' ';
        operand(f.children()[1], indent + c.size() + 1);
        return;
      }
      case Op::kNot:
        if (f.body().op() == Op::kEqual) {
          out += flat;
          return;
        }
        out += "~ ";
        operand(f.body(), indent + 2);
        return;
      default:
        out += flat;
        return;
    }
  }

 private:
  void newline(std::size_t indent) {
    out += '\n';
    out.append(indent, ' ');
  }

  void operand(const Formula& f, std::size_t indent) {
    if (is_primitive(f)) {
      out += to_tptp(f);
      return;
    }
    out += "( ";
    formula(f, indent + 2);
    out += " )";
  }
};

}  // namespace

std::string to_tptp(const Term& t) {
  if (t.kind != Term::Kind::kFunc) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    out += to_tptp(t.args[i]);
  }
  out += ")";
  return out;
}

std::string to_tptp(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom: {
      std::string out = f.pred() + "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ", ";
        out += to_tptp(f.args()[i]);
      }
      return out + ")";
    }
    case Op::kEqual:
      return to_tptp(f.args()[0]) + " = " + to_tptp(f.args()[1]);
    case Op::kTrue:
      return "$true";
    case Op::kFalse:
      return "$false";
    case Op::kNot:
      if (f.body().op() == Op::kEqual) {
        return to_tptp(f.body().args()[0]) + " != " +
               to_tptp(f.body().args()[1]);
      }
      return "~ " + operand_flat(f.body());
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
    case Op::kIff: {
      std::string sep = " ";
      sep += connective(f.op());
      sep += ' ';
      std::string out;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        out += operand_flat(f.children()[i]);
      }
      return out;
    }
    case Op::kForall:
    case Op::kExists:
      return quantifier_head(f) + " " + to_tptp(f.body()) + " )";
  }
  return {};
}

std::string format_formula(const Formula& f, std::size_t indent) {
  Pretty p;
  p.formula(f, indent);
  return p.out;
}

std::string to_tptp(const NamedFormula& f) {
  if (!is_formula_name(f.name)) {
    throw std::invalid_argument("illegal formula name '" + f.name + "'");
  }
  std::string head = "fof(" + f.name + ", " + std::string(role_name(f.role)) + ", (";
  std::string flat = head + " " + to_tptp(f.formula) + " )).";
  if (flat.size() <= kTptpLineWidth) return flat + "\n";
  return head + "\n    " + format_formula(f.formula, 4) + " )).\n";
}

std::string serialize_tptp(const Problem& p,
                           const std::vector<std::string>& comments) {
  std::string out;
  for (const std::string& c : comments) {
    out += c.empty() ? "%\n" : "% " + c + "\n";
  }
  if (!comments.empty() && !p.empty()) out += "\n";
  for (std::size_t i = 0; i < p.formulas().size(); ++i) {
    if (i) out += "\n";
    out += to_tptp(p.formulas()[i]);
  }
  return out;
}

}  // namespace owlfol::fol
