// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_SUITE_REPORT_H_
#define OWLFOL_SUITE_REPORT_H_

#include <cstddef>
#include <string>
#include <vector>

#include "owlfol/prover/szs.h"

namespace owlfol::suite {

struct ResultRow {
  std::string test_id;
  prover::Verdict verdict = prover::Verdict::kUnknown;
  double elapsed_s = 0;
  prover::SzsStatus status = prover::SzsStatus::kUnknown;
  std::string diagnostic;
};

struct Summary {
  std::size_t success = 0;
  std::size_t wrong = 0;
  std::size_t unknown = 0;

  std::size_t total() const { return success + wrong + unknown; }
};

struct ResultTable {
  std::vector<ResultRow> rows;         // ordered by test id
  std::vector<std::string> excluded;   // ids left out of scoring

  Summary summary() const;
};

enum class Format { kCsv, kMarkdown };

// CSV: header `test,verdict,seconds,szs`. Markdown: a table with the same
// columns followed by `Success N, Wrong N, Unknown N`. Seconds use two
// decimals.
std::string render_table(const ResultTable& t, Format format);

std::string format_seconds(double s);

}  // namespace owlfol::suite

#endif  // OWLFOL_SUITE_REPORT_H_
