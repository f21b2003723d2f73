// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_FOL_TPTP_WRITER_H_
#define OWLFOL_FOL_TPTP_WRITER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "owlfol/fol/formula.h"

namespace owlfol::fol {

inline constexpr std::size_t kTptpLineWidth = 78;

std::string to_tptp(const Term& t);
// Single-line rendering.
std::string to_tptp(const Formula& f);
// Multi-line rendering for a formula starting at column `indent`.
std::string format_formula(const Formula& f, std::size_t indent);
// `fof(name, role, ( F )).` followed by a newline.
std::string to_tptp(const NamedFormula& f);

// Comment lines are written first, each prefixed with "% ". Blocks are
// separated by blank lines.
std::string serialize_tptp(const Problem& p,
                           const std::vector<std::string>& comments = {});

}  // namespace owlfol::fol

#endif  // OWLFOL_FOL_TPTP_WRITER_H_
