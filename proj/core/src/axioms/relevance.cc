// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/axioms/relevance.h"

#include <unordered_map>
#include <unordered_set>

namespace owlfol::axioms {

std::vector<AxiomEntry> select_relevant(const std::vector<AxiomEntry>& axioms,
                                        const std::set<std::string>& goal_symbols,
                                        std::optional<std::size_t> hops) {
  std::unordered_map<std::string_view, std::vector<std::size_t>> users;
  std::vector<bool> admitted(axioms.size(), false);
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (axioms[i].symbols.empty()) admitted[i] = true;
    for (const std::string& s : axioms[i].symbols) users[s].push_back(i);
  }

  std::unordered_set<std::string_view> reached;
  std::vector<std::string_view> frontier;
  for (const std::string& s : goal_symbols) {
    if (reached.insert(s).second) frontier.push_back(s);
  }

  for (std::size_t level = 0; !hops || level < *hops; ++level) {
    std::vector<std::size_t> fresh;
    for (std::string_view s : frontier) {
      auto it = users.find(s);
      if (it == users.end()) continue;
      for (std::size_t i : it->second) {
        if (!admitted[i]) {
          admitted[i] = true;
          fresh.push_back(i);
        }
      }
    }
    if (fresh.empty()) break;
    frontier.clear();
    for (std::size_t i : fresh) {
      for (const std::string& s : axioms[i].symbols) {
        if (reached.insert(s).second) frontier.push_back(s);
      }
    }
  }

  std::vector<AxiomEntry> out;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (admitted[i]) out.push_back(axioms[i]);
  }
  return out;
}

}  // namespace owlfol::axioms
