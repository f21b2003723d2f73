// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_TOOLS_CLI_H_
#define OWLFOL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace owlfol::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;  // bad flags or parse error
inline constexpr int kExitIo = 3;     // I/O error or prover spawn failure
inline constexpr int kExitWrong = 10;
inline constexpr int kExitUnknown = 11;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace owlfol::cli

#endif  // OWLFOL_TOOLS_CLI_H_
