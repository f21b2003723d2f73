// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_AXIOMS_SCHEMA_H_
#define OWLFOL_AXIOMS_SCHEMA_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "owlfol/fol/formula.h"

namespace owlfol::axioms {

inline constexpr std::size_t kMaxSchemaArity = 3;

// Size-parameterized feature groups: bool.intersectionOf, bool.unionOf,
// enum.oneOf, chain.propertyChainAxiom and eqdis.allDifferent.
const std::vector<std::string_view>& schema_features();
bool is_schema_feature(std::string_view feature);

// The condition for one list length. Throws std::invalid_argument for an
// arity outside 1..3 or a feature that is not size-parameterized.
fol::Formula schema_instance(std::string_view feature, std::size_t arity);

// One formula per list length 1..arity, shortest first.
std::vector<fol::Formula> instantiate_schema(std::string_view feature,
                                             std::size_t arity);

// Store name of an instance, e.g. owl_bool_unionof_class_003.
std::string schema_entry_name(std::string_view feature, std::size_t arity);

}  // namespace owlfol::axioms

#endif  // OWLFOL_AXIOMS_SCHEMA_H_
