// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OWLFOL_SUITE_BULK_H_
#define OWLFOL_SUITE_BULK_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string_view>

#include "owlfol/rdf/model.h"

namespace owlfol::suite {

inline constexpr std::string_view kBulkNamespace = "http://bulk.example.org/";
inline constexpr std::size_t kBulkPredicates = 32;

// Streams n distinct triples over kBulkNamespace. Triple i has a random
// subject s{k} with k < max(1, n/4), a random predicate p{k} with k < 32 and
// the object o{i}, so triples never repeat.
class BulkGenerator {
 public:
  BulkGenerator(std::size_t n, std::uint64_t seed);

  bool done() const { return i_ >= n_; }
  rdf::Triple next();

 private:
  std::size_t n_;
  std::size_t i_ = 0;
  std::size_t subjects_;
  std::mt19937_64 rng_;
};

rdf::Graph gen_bulk(std::size_t n, std::uint64_t seed);

// Writes the generated triples as N-Triples in generation order without
// materializing a Graph. Returns the number of lines written.
std::size_t write_bulk(std::ostream& out, std::size_t n, std::uint64_t seed);

}  // namespace owlfol::suite

#endif  // OWLFOL_SUITE_BULK_H_
