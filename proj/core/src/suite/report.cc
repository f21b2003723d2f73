// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/suite/report.h"

#include <cstdio>

namespace owlfol::suite {

Summary ResultTable::summary() const {
  Summary s;
  for (const ResultRow& r : rows) {
    switch (r.verdict) {
      case prover::Verdict::kSuccess: ++s.success; break;
      case prover::Verdict::kWrong: ++s.wrong; break;
      case prover::Verdict::kUnknown: ++s.unknown; break;
    }
  }
  return s;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s < 0 ? 0.0 : s);
  return buf;
}

std::string render_table(const ResultTable& t, Format format) {
  std::string out;
  if (format == Format::kCsv) {
    out = "test,verdict,seconds,szs\n";
    for (const ResultRow& r : t.rows) {
      out += r.test_id;
      out += ',';
      out += prover::glyph(r.verdict);
      out += ',';
      out += format_seconds(r.elapsed_s);
      out += ',';
      out += prover::to_string(r.status);
      out += '\n';
    }
    return out;
  }
  out = "| test | verdict | seconds | szs |\n|---|---|---|---|\n";
  for (const ResultRow& r : t.rows) {
    out += "| " + r.test_id + " | ";
    out += prover::glyph(r.verdict);
    out += " | " + format_seconds(r.elapsed_s) + " | ";
    out += prover::to_string(r.status);
    out += " |\n";
  }
  const Summary s = t.summary();
  out += "\nSuccess " + std::to_string(s.success) + ", Wrong " +
         std::to_string(s.wrong) + ", Unknown " + std::to_string(s.unknown) +
         "\n";
  if (!t.excluded.empty()) {
    out += "\nExcluded:";
    for (const std::string& id : t.excluded) out += " " + id;
    out += "\n";
  }
  return out;
}

}  // namespace owlfol::suite
