// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_AXIOMS_RELEVANCE_H_
#define OWLFOL_AXIOMS_RELEVANCE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "owlfol/axioms/store.h"

namespace owlfol::axioms {

// Symbol-reachability filter. Level 0 is goal_symbols; each hop admits every
// axiom sharing a constant or function symbol with the reached set and adds
// its symbols. Axioms without any such symbol are always admitted. A missing
// hop count runs to the fixpoint. The result keeps the input order.
std::vector<AxiomEntry> select_relevant(const std::vector<AxiomEntry>& axioms,
                                        const std::set<std::string>& goal_symbols,
                                        std::optional<std::size_t> hops);

}  // namespace owlfol::axioms

#endif  // OWLFOL_AXIOMS_RELEVANCE_H_
