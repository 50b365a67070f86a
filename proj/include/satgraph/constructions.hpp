#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "satgraph/graph.hpp"

namespace satgraph {

// (k-1)(n-1) - floor(n/(k+1)) * C(k-1, 2), the edge count of G(k, n).
std::int64_t rho(int k, std::int64_t n);

// Complete graph on k+1 vertices minus the edge {0, k}.
Graph build_k_minus(int k);

// Clique on {0..k-2} joined to the independent set {k-1..n-1}.
Graph build_complete_split(int n, int k);

struct GknLayout {
    int k = 0;
    int n = 0;
    int t = 0;  // number of blocks
    int r = 0;  // number of tail vertices
    std::vector<std::vector<int>> blocks;
    std::vector<int> tail;
};

// Block-ladder construction G(k, n): t = floor(n/(k+1)) blocks, each a
// complete graph on k+1 vertices minus one edge, consecutive blocks tied by
// k-1 ladder edges, plus r = n - t(k+1) tail vertices attached to the k-1
// middle vertices of the last block.  Block i occupies vertices
// (i-1)(k+1)..(i-1)(k+1)+k with missing edge at the two ends; tail vertex j
// is t(k+1)+j-1.  Requires k >= 3, n >= k+1.
std::pair<Graph, GknLayout> build_gkn(int k, int n);

// q-tree: start from a clique on {0..q-1}, then attach each new vertex to an
// existing q-clique.  attachments[i] lists the q neighbors of vertex q+i.
Graph build_k_tree(int q, int n, const std::vector<std::vector<int>>& attachments);

// Seeded variant.  The generator is part of the contract: a splitmix64
// stream seeded with `seed` drives every choice; a list of q-cliques starts
// as [base clique] and, after attaching v to the clique C at index
// next_below(list size), grows by the q cliques (C minus its i-th smallest
// member) + v, for i ascending, each stored sorted.
Graph build_k_tree_seeded(int q, int n, std::uint64_t seed);

}  // namespace satgraph
