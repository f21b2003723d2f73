// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_PROVER_CONFIG_H_
#define OWLFOL_PROVER_CONFIG_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace owlfol::prover {

enum class Mode { kProve, kModelfind };

std::string_view to_string(Mode m);
// Throws std::invalid_argument for anything but "prove" or "modelfind".
Mode parse_mode(std::string_view s);

inline constexpr int kDefaultTimeoutS = 300;
inline constexpr std::size_t kDefaultOutputCap = 1 << 20;

struct ProverConfig {
  std::string id;
  // Shell command; {input} is replaced by the quoted problem path,
  // {timeout_s} by the timeout in whole seconds and {config_dir} by the
  // quoted config_dir.
  std::string command_template;
  Mode mode = Mode::kProve;
  int timeout_s = kDefaultTimeoutS;
  std::size_t output_cap = kDefaultOutputCap;
  // Directory of the file the config was loaded from; "." when parsed from
  // text.
  std::filesystem::path config_dir = ".";

  // Throws std::invalid_argument when the template lacks {input}, the
  // timeout is not positive or the id is empty.
  void validate() const;
  std::string command_for(const std::filesystem::path& input) const;
};

// Reads `key = value` lines (id, cmd, mode, timeout, output_cap); '#' starts
// a comment. Each `id` line begins a new config. Throws std::invalid_argument
// on unknown keys, bad values or an invalid config.
std::vector<ProverConfig> parse_prover_configs(std::string_view text);
// First config in the file, or the one with the given id.
ProverConfig load_prover_config(const std::filesystem::path& file,
                                std::string_view id = {});

// Single-quotes s for /bin/sh.
std::string shell_quote(std::string_view s);

}  // namespace owlfol::prover

#endif  // OWLFOL_PROVER_CONFIG_H_
