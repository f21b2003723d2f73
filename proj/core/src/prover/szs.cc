// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/prover/szs.h"

#include <cctype>

namespace owlfol::prover {

std::string_view to_string(SzsStatus s) {
  switch (s) {
    case SzsStatus::kTheorem: return "Theorem";
    case SzsStatus::kUnsatisfiable: return "Unsatisfiable";
    case SzsStatus::kCounterSatisfiable: return "CounterSatisfiable";
    case SzsStatus::kSatisfiable: return "Satisfiable";
    case SzsStatus::kTimeout: return "Timeout";
    case SzsStatus::kGaveUp: return "GaveUp";
    case SzsStatus::kError: return "Error";
    case SzsStatus::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<SzsStatus> szs_from_word(std::string_view word) {
  for (SzsStatus s : kAllStatuses) {
    if (word == to_string(s)) return s;
  }
  if (word == "ResourceOut") return SzsStatus::kTimeout;
  if (word == "ContradictoryAxioms") return SzsStatus::kUnsatisfiable;
  return std::nullopt;
}

SzsStatus parse_szs_status(std::string_view output) {
  static constexpr std::string_view kMarker = "SZS status";
  std::size_t pos = 0;
  while (pos < output.size()) {
    std::size_t end = output.find('\n', pos);
    if (end == std::string_view::npos) end = output.size();
    std::string_view line = output.substr(pos, end - pos);
    if (auto m = line.find(kMarker); m != std::string_view::npos) {
      std::size_t w = m + kMarker.size();
      while (w < line.size() && std::isspace(static_cast<unsigned char>(line[w]))) {
        ++w;
      }
      std::size_t we = w;
      while (we < line.size() && std::isalpha(static_cast<unsigned char>(line[we]))) {
        ++we;
      }
      if (we > w) return szs_from_word(line.substr(w, we - w)).value_or(SzsStatus::kUnknown);
    }
    pos = end + 1;
  }
  return SzsStatus::kUnknown;
}

std::string_view to_string(TaskKind k) {
  switch (k) {
    case TaskKind::kPositiveEntailment: return "entailment";
    case TaskKind::kInconsistency: return "inconsistency";
    case TaskKind::kNonEntailment: return "non-entailment";
    case TaskKind::kConsistency: return "consistency";
  }
  return "entailment";
}

char glyph(Verdict v) {
  switch (v) {
    case Verdict::kSuccess: return '+';
    case Verdict::kWrong: return '-';
    case Verdict::kUnknown: return '?';
  }
  return '?';
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSuccess: return "+";
    case Verdict::kWrong: return "-";
    case Verdict::kUnknown: return "?";
  }
  return "?";
}

Verdict interpret(TaskKind kind, SzsStatus status) {
  const bool proved =
      status == SzsStatus::kTheorem || status == SzsStatus::kUnsatisfiable;
  const bool refuted = status == SzsStatus::kCounterSatisfiable ||
                       status == SzsStatus::kSatisfiable;
  switch (kind) {
    case TaskKind::kPositiveEntailment:
    case TaskKind::kInconsistency:
      if (proved) return Verdict::kSuccess;
      if (refuted) return Verdict::kWrong;
      return Verdict::kUnknown;
    case TaskKind::kNonEntailment:
    case TaskKind::kConsistency:
      if (refuted) return Verdict::kSuccess;
      if (proved) return Verdict::kWrong;
      return Verdict::kUnknown;
  }
  return Verdict::kUnknown;
}

}  // namespace owlfol::prover
