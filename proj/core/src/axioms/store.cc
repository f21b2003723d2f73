// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/axioms/store.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "owlfol/embedded_data.h"
#include "owlfol/fol/tptp_reader.h"

namespace owlfol::axioms {

namespace {

std::set<std::string> split_words(std::string_view s) {
  std::set<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.insert(w);
  return out;
}

std::string file_name(std::string_view path) {
  auto slash = path.find_last_of('/');
  return std::string(slash == std::string_view::npos ? path
                                                     : path.substr(slash + 1));
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

const std::vector<std::string_view>& known_profiles() {
  static const std::vector<std::string_view> kProfiles = {
      kOwl2Full, kAlcoFull, kRdfsExt, kDatatypeFacts};
  return kProfiles;
}

bool is_known_profile(std::string_view id) {
  const auto& p = known_profiles();
  return std::find(p.begin(), p.end(), id) != p.end();
}

std::map<std::string, std::vector<std::string>> parse_manifest(
    std::string_view text) {
  std::map<std::string, std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("manifest line " + std::to_string(lineno) +
                               ": missing ':'");
    }
    std::istringstream id_in(line.substr(0, colon));
    std::string id;
    id_in >> id;
    if (id.empty()) {
      throw std::runtime_error("manifest line " + std::to_string(lineno) +
                               ": empty test id");
    }
    if (out.count(id)) {
      throw std::runtime_error("manifest line " + std::to_string(lineno) +
                               ": duplicate test id " + id);
    }
    std::vector<std::string> names;
    std::istringstream rest(line.substr(colon + 1));
    std::string name;
    while (rest >> name) names.push_back(name);
    out.emplace(std::move(id), std::move(names));
  }
  return out;
}

AxiomStore AxiomStore::from_files(std::vector<DataFile> files) {
  std::sort(files.begin(), files.end(),
            [](const DataFile& a, const DataFile& b) { return a.path < b.path; });
  AxiomStore store;
  bool have_manifest = false;
  for (const DataFile& f : files) {
    const std::string base = file_name(f.path);
    if (base == "subsets.txt") {
      store.manifest_ = parse_manifest(f.content);
      have_manifest = true;
      continue;
    }
    if (!ends_with(base, ".ax")) continue;
    fol::TptpFile parsed;
    try {
      parsed = fol::read_tptp(f.content);
    } catch (const fol::TptpSyntaxError& e) {
      throw std::runtime_error(base + ": " + e.what());
    }
    std::set<std::string> file_profiles;
    if (auto it = parsed.header.find("profiles"); it != parsed.header.end()) {
      file_profiles = split_words(it->second);
    }
    std::string file_feature;
    if (auto it = parsed.header.find("feature"); it != parsed.header.end()) {
      file_feature = it->second;
    }
    for (fol::TptpUnit& u : parsed.units) {
      AxiomEntry e;
      e.name = u.formula.name;
      if (u.formula.role != fol::Role::kAxiom) {
        throw std::runtime_error(base + ": " + e.name + " is not an axiom");
      }
      try {
        fol::validate(u.formula.formula);
      } catch (const std::invalid_argument& err) {
        throw std::runtime_error(base + ": " + e.name + ": " + err.what());
      }
      e.formula = std::move(u.formula.formula);
      auto p = u.directives.find("profiles");
      e.profiles = p != u.directives.end() ? split_words(p->second)
                                           : file_profiles;
      for (const std::string& id : e.profiles) {
        if (!is_known_profile(id)) {
          throw std::runtime_error(base + ": " + e.name +
                                   ": unknown profile " + id);
        }
      }
      auto feat = u.directives.find("feature");
      e.feature = feat != u.directives.end() ? feat->second : file_feature;
      e.symbols = fol::collect_symbols(e.formula);
      e.source = base;
      if (store.by_name_.count(e.name)) {
        throw std::runtime_error(base + ": duplicate axiom name " + e.name);
      }
      store.by_name_.emplace(e.name, store.entries_.size());
      store.entries_.push_back(std::move(e));
    }
  }
  if (!have_manifest) throw std::runtime_error("missing subsets.txt manifest");
  for (const auto& [id, names] : store.manifest_) {
    for (const std::string& n : names) {
      if (!store.by_name_.count(n)) {
        throw std::runtime_error("manifest entry " + id +
                                 " names unknown axiom " + n);
      }
    }
  }
  return store;
}

AxiomStore AxiomStore::from_directory(const std::filesystem::path& dir) {
  std::vector<DataFile> files;
  for (const auto& de : std::filesystem::directory_iterator(dir)) {
    if (!de.is_regular_file()) continue;
    std::ifstream in(de.path(), std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + de.path().string());
    std::ostringstream buf;
    buf << in.rdbuf();
    files.push_back({de.path().filename().string(), buf.str()});
  }
  return from_files(std::move(files));
}

const AxiomStore& AxiomStore::builtin() {
  static const AxiomStore store = [] {
    std::vector<DataFile> files;
    for (const EmbeddedFile& f : embedded_files()) {
      if (f.path.substr(0, 7) == "axioms/") {
        files.push_back({std::string(f.path), std::string(f.content)});
      }
    }
    return from_files(std::move(files));
  }();
  return store;
}

const AxiomEntry* AxiomStore::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? nullptr : &entries_[it->second];
}

const AxiomEntry& AxiomStore::get(std::string_view name) const {
  if (const AxiomEntry* e = find(name)) return *e;
  throw std::out_of_range("unknown axiom " + std::string(name));
}

std::vector<AxiomEntry> AxiomStore::load_profile(std::string_view id) const {
  if (!is_known_profile(id)) {
    throw std::invalid_argument("unknown profile " + std::string(id));
  }
  std::vector<AxiomEntry> out;
  for (const AxiomEntry& e : entries_) {
    if (e.profiles.count(std::string(id))) out.push_back(e);
  }
  return out;
}

const std::string& AxiomStore::resolve_test_id(std::string_view test_id) const {
  if (auto it = manifest_.find(std::string(test_id)); it != manifest_.end()) {
    return it->first;
  }
  if (test_id.size() == 3) {
    for (const auto& [id, names] : manifest_) {
      if (id.size() > 3 && id.compare(0, 3, test_id) == 0 && id[3] == '_') {
        return id;
      }
    }
  }
  throw std::out_of_range("unknown test id " + std::string(test_id));
}

std::vector<AxiomEntry> AxiomStore::get_subset(std::string_view test_id) const {
  std::vector<AxiomEntry> out;
  for (const std::string& n : manifest_.at(resolve_test_id(test_id))) {
    out.push_back(get(n));
  }
  return out;
}

}  // namespace owlfol::axioms
