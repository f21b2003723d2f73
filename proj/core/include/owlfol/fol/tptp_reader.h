// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_FOL_TPTP_READER_H_
#define OWLFOL_FOL_TPTP_READER_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owlfol/fol/formula.h"

namespace owlfol::fol {

class TptpSyntaxError : public std::runtime_error {
 public:
  TptpSyntaxError(const std::string& message, std::size_t line,
                  std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct TptpUnit {
  NamedFormula formula;
  // `%@ key: value` comment lines directly preceding the unit.
  std::map<std::string, std::string> directives;
  std::size_t line = 0;
};

struct TptpFile {
  // `% key: value` comment lines before the first unit.
  std::map<std::string, std::string> header;
  std::vector<TptpUnit> units;
};

// Reads fof units. Roles other than conjecture are read as axioms. The
// result is syntactic only; call validate() to check vocabulary and binding.
TptpFile read_tptp(std::string_view text);

Formula parse_formula(std::string_view text);

// All units of text, in order, as a Problem.
Problem parse_problem(std::string_view text);

}  // namespace owlfol::fol

#endif  // OWLFOL_FOL_TPTP_READER_H_
