// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_RDF_PARSE_ERROR_H_
#define OWLFOL_RDF_PARSE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace owlfol::rdf {

// Syntax error in an RDF document. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace owlfol::rdf

#endif  // OWLFOL_RDF_PARSE_ERROR_H_
