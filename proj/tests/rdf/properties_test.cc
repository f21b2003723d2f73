// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

// Randomized round-trip and determinism properties over generated graphs.

#include <gtest/gtest.h>

#include "owlfol/rdf/model.h"
#include "owlfol/rdf/ntriples.h"
#include "test_support.h"

namespace owlfol::rdf {
namespace {

TEST(RdfPropertyTest, NTriplesRoundTripUpToBijection) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = testing::random_graph(seed, 40, 8);
    Graph back = parse_ntriples(write_ntriples(g));
    ASSERT_TRUE(isomorphic(back, g)) << "seed " << seed;
    ASSERT_EQ(back.size(), g.size());
  }
}

TEST(RdfPropertyTest, CanonicalSerializationIsOrderIndependent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = testing::random_graph(seed, 30, 5);
    Graph reversed;
    for (auto it = g.triples().rbegin(); it != g.triples().rend(); ++it) {
      reversed.add(*it);
    }
    ASSERT_EQ(write_ntriples(g), write_ntriples(reversed)) << "seed " << seed;
    ASSERT_TRUE(g == reversed);
  }
}

TEST(RdfPropertyTest, UnionSizeAndLabels) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph a = testing::random_graph(seed, 20, 4);
    Graph b = testing::random_graph(seed + 1000, 20, 4);
    Graph u = graph_union(a, b);
    ASSERT_LE(u.size(), a.size() + b.size());
    ASSERT_GE(u.size(), std::max(a.size(), b.size()));
    ASSERT_EQ(u.blank_labels().size(),
              a.blank_labels().size() + b.blank_labels().size());
    for (const auto& t : a.triples()) ASSERT_TRUE(u.contains(t));
  }
}

}  // namespace
}  // namespace owlfol::rdf
