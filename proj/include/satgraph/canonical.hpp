#pragma once

#include <cstdint>

#include "satgraph/graph.hpp"

namespace satgraph {

// Canonical form for isomorphism classes, n <= 11.  The key is the
// lexicographically minimal bit string over all vertex orderings pi, where
// the bits are adj(pi(i), pi(j)) for j = 1..n-1 and i = 0..j-1, packed so
// that integer comparison equals lexicographic comparison.  Computed by
// branch and bound over partial orderings.
std::uint64_t canonical_key(const Graph& g);

// Rebuild the canonical representative from its key.
Graph graph_from_key(int n, std::uint64_t key);

}  // namespace satgraph
