// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_AXIOMS_STORE_H_
#define OWLFOL_AXIOMS_STORE_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "owlfol/fol/formula.h"

namespace owlfol::axioms {

inline constexpr std::string_view kOwl2Full = "owl2-full";
inline constexpr std::string_view kAlcoFull = "alco-full";
inline constexpr std::string_view kRdfsExt = "rdfs-ext";
inline constexpr std::string_view kDatatypeFacts = "datatype-facts";

const std::vector<std::string_view>& known_profiles();
bool is_known_profile(std::string_view id);

struct AxiomEntry {
  std::string name;
  fol::Formula formula;
  std::set<std::string> profiles;
  std::string feature;
  std::set<std::string> symbols;  // collect_symbols(formula)
  std::string source;             // file the entry was read from

  fol::NamedFormula named() const {
    return {name, fol::Role::kAxiom, formula};
  }
};

struct DataFile {
  std::string path;  // e.g. "axioms/rdf.ax"; only the file name is used
  std::string content;
};

// Immutable after construction; safe for concurrent reads.
class AxiomStore {
 public:
  // Reads every "*.ax" file (TPTP with profile/feature comments) and the
  // manifest "subsets.txt", in path order. Throws std::runtime_error on
  // malformed data, duplicate names or manifest entries naming unknown
  // axioms.
  static AxiomStore from_files(std::vector<DataFile> files);
  static AxiomStore from_directory(const std::filesystem::path& dir);
  // The axiom data compiled into the library.
  static const AxiomStore& builtin();

  const std::vector<AxiomEntry>& entries() const { return entries_; }
  // Throws std::out_of_range for an unknown name.
  const AxiomEntry& get(std::string_view name) const;
  const AxiomEntry* find(std::string_view name) const;

  // Ordered entries tagged with the profile. Throws std::invalid_argument
  // for an unknown id.
  std::vector<AxiomEntry> load_profile(std::string_view id) const;

  // test_id is a full id such as "020_Logical_Complications" or its
  // three-digit prefix. Throws std::out_of_range for an unknown test.
  std::vector<AxiomEntry> get_subset(std::string_view test_id) const;
  const std::map<std::string, std::vector<std::string>>& manifest() const {
    return manifest_;
  }
  // Full test id for id or its prefix; throws std::out_of_range.
  const std::string& resolve_test_id(std::string_view test_id) const;

 private:
  std::vector<AxiomEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::map<std::string, std::vector<std::string>> manifest_;
};

// Parses the manifest format `test_id: name name ...`; '#' starts a comment.
std::map<std::string, std::vector<std::string>> parse_manifest(
    std::string_view text);

}  // namespace owlfol::axioms

#endif  // OWLFOL_AXIOMS_STORE_H_
