// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/prover/config.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace owlfol::prover {

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

template <typename T>
T parse_number(const std::string& value, const std::string& key) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
  return out;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

std::string_view to_string(Mode m) {
  return m == Mode::kModelfind ? "modelfind" : "prove";
}

Mode parse_mode(std::string_view s) {
  if (s == "prove") return Mode::kProve;
  if (s == "modelfind") return Mode::kModelfind;
  throw std::invalid_argument("mode must be prove or modelfind, got '" +
                              std::string(s) + "'");
}

void ProverConfig::validate() const {
  if (id.empty()) throw std::invalid_argument("prover config without id");
  if (command_template.find("{input}") == std::string::npos) {
    throw std::invalid_argument("prover " + id + ": cmd lacks {input}");
  }
  if (timeout_s <= 0) {
    throw std::invalid_argument("prover " + id + ": timeout must be positive");
  }
}

std::string ProverConfig::command_for(const std::filesystem::path& input) const {
  std::string cmd = command_template;
  replace_all(cmd, "{input}", shell_quote(input.string()));
  replace_all(cmd, "{timeout_s}", std::to_string(timeout_s));
  replace_all(cmd, "{config_dir}", shell_quote(config_dir.string()));
  return cmd;
}

std::vector<ProverConfig> parse_prover_configs(std::string_view text) {
  std::vector<ProverConfig> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key == "id") {
      out.emplace_back();
      out.back().id = value;
      continue;
    }
    if (out.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": " + key + " before id");
    }
    ProverConfig& cfg = out.back();
    if (key == "cmd") {
      cfg.command_template = value;
    } else if (key == "mode") {
      cfg.mode = parse_mode(value);
    } else if (key == "timeout") {
      cfg.timeout_s = parse_number<int>(value, key);
    } else if (key == "output_cap") {
      cfg.output_cap = parse_number<std::size_t>(value, key);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key " + key);
    }
  }
  for (const ProverConfig& cfg : out) cfg.validate();
  return out;
}

ProverConfig load_prover_config(const std::filesystem::path& file,
                                std::string_view id) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<ProverConfig> all = parse_prover_configs(buf.str());
  if (all.empty()) {
    throw std::invalid_argument(file.string() + ": no prover config");
  }
  const std::filesystem::path dir =
      std::filesystem::absolute(file).parent_path();
  for (ProverConfig& cfg : all) cfg.config_dir = dir;
  if (id.empty()) return all.front();
  for (ProverConfig& cfg : all) {
    if (cfg.id == id) return cfg;
  }
  throw std::invalid_argument(file.string() + ": no prover with id " +
                              std::string(id));
}

std::string shell_quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

}  // namespace owlfol::prover
