// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_PROVER_RUN_H_
#define OWLFOL_PROVER_RUN_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "owlfol/prover/config.h"
#include "owlfol/prover/szs.h"

namespace owlfol::prover {

// Seconds between SIGTERM and SIGKILL once the timeout has passed.
inline constexpr double kKillGraceS = 2.0;

struct ProverRun {
  SzsStatus status = SzsStatus::kUnknown;
  double elapsed_s = 0;
  std::string raw;  // combined stdout and stderr, truncated at the cap
  bool truncated = false;
  std::optional<int> exit_code;  // absent when killed by a signal
  bool timed_out = false;
  std::string diagnostic;  // set for Error results
};

struct RunOptions {
  // When set, the problem and the raw output are kept in this directory as
  // problem.p and output.txt.
  std::optional<std::filesystem::path> artifact_dir;
};

// Temp directory for problem files: $OWLFOL_TMPDIR, else the system default.
std::filesystem::path temp_directory();

// Writes the problem to a file, runs the configured command in its own
// process group and enforces the timeout on wall-clock time. The child and
// its process group are reaped before returning.
ProverRun run_prover(std::string_view problem_text, const ProverConfig& cfg,
                     const RunOptions& options = {});

}  // namespace owlfol::prover

#endif  // OWLFOL_PROVER_RUN_H_
