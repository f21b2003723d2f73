// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/suite/bulk.h"

#include <algorithm>
#include <ostream>
#include <string>

#include "owlfol/rdf/ntriples.h"

namespace owlfol::suite {

namespace {

std::string bulk_iri(char kind, std::uint64_t k) {
  std::string s(kBulkNamespace);
  s += kind;
  s += std::to_string(k);
  return s;
}

}  // namespace

BulkGenerator::BulkGenerator(std::size_t n, std::uint64_t seed)
    : n_(n), subjects_(std::max<std::size_t>(1, n / 4)), rng_(seed) {}

rdf::Triple BulkGenerator::next() {
  const std::uint64_t s = rng_() % subjects_;
  const std::uint64_t p = rng_() % kBulkPredicates;
  rdf::Triple t{rdf::Iri{bulk_iri('s', s)}, rdf::Iri{bulk_iri('p', p)},
                rdf::Iri{bulk_iri('o', i_)}};
  ++i_;
  return t;
}

rdf::Graph gen_bulk(std::size_t n, std::uint64_t seed) {
  rdf::Graph g;
  BulkGenerator gen(n, seed);
  while (!gen.done()) g.add(gen.next());
  return g;
}

std::size_t write_bulk(std::ostream& out, std::size_t n, std::uint64_t seed) {
  BulkGenerator gen(n, seed);
  std::size_t lines = 0;
  std::string line;
  while (!gen.done()) {
    line = rdf::to_ntriples(gen.next());
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    ++lines;
  }
  return lines;
}

}  // namespace owlfol::suite
