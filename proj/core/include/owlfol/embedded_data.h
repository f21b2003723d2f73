// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_EMBEDDED_DATA_H_
#define OWLFOL_EMBEDDED_DATA_H_

#include <string_view>
#include <vector>

namespace owlfol {

// A data file compiled into the library, keyed by its repository path
// (for example "axioms/rdfs.ax" or "suite/020/meta").
struct EmbeddedFile {
  std::string_view path;
  std::string_view content;
};

// All bundled axiom and suite files, sorted by path.
const std::vector<EmbeddedFile>& embedded_files();

}  // namespace owlfol

#endif  // OWLFOL_EMBEDDED_DATA_H_
