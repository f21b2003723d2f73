// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_PROVER_SZS_H_
#define OWLFOL_PROVER_SZS_H_

#include <array>
#include <optional>
#include <string_view>

namespace owlfol::prover {

enum class SzsStatus {
  kTheorem,
  kUnsatisfiable,
  kCounterSatisfiable,
  kSatisfiable,
  kTimeout,
  kGaveUp,
  kError,
  kUnknown,
};

inline constexpr std::array<SzsStatus, 8> kAllStatuses = {
    SzsStatus::kTheorem,     SzsStatus::kUnsatisfiable,
    SzsStatus::kCounterSatisfiable, SzsStatus::kSatisfiable,
    SzsStatus::kTimeout,     SzsStatus::kGaveUp,
    SzsStatus::kError,       SzsStatus::kUnknown};

std::string_view to_string(SzsStatus s);
// Accepts the eight names plus ResourceOut (Timeout) and ContradictoryAxioms
// (Unsatisfiable); anything else is nullopt.
std::optional<SzsStatus> szs_from_word(std::string_view word);
// Status from the first line containing `SZS status <word>`; Unknown when
// no such line exists or the word is not recognized.
SzsStatus parse_szs_status(std::string_view output);

enum class TaskKind {
  kPositiveEntailment,
  kInconsistency,
  kNonEntailment,
  kConsistency,
};

inline constexpr std::array<TaskKind, 4> kAllKinds = {
    TaskKind::kPositiveEntailment, TaskKind::kInconsistency,
    TaskKind::kNonEntailment, TaskKind::kConsistency};

std::string_view to_string(TaskKind k);

enum class Verdict { kSuccess, kWrong, kUnknown };

// '+', '-' or '?'.
char glyph(Verdict v);
std::string_view to_string(Verdict v);

Verdict interpret(TaskKind kind, SzsStatus status);

}  // namespace owlfol::prover

#endif  // OWLFOL_PROVER_SZS_H_
