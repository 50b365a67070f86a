#pragma once

// Independent brute-force reference implementations used only by tests.
// Everything here trades speed for obviousness so library results can be
// cross-checked on small graphs.

#include <cstdint>
#include <utility>
#include <vector>

#include "satgraph/graph.hpp"

namespace oracles {

using satgraph::Graph;
using satgraph::VertexSet;

// Minimum edge cut by scanning all bipartitions. Returns {value, side}
// where side is the achieving side containing vertex 0 with the
// numerically smallest bitset.
std::pair<int, VertexSet> brute_min_edge_cut(const Graph& g);

int brute_edge_connectivity(const Graph& g);

// Vertex connectivity by deleting every vertex subset of size < n-1.
int brute_vertex_connectivity(const Graph& g);

// Subset scans for member subgraphs.
bool brute_has_k_edge_connected_subgraph(const Graph& g, int k);
bool brute_has_k_connected_subgraph(const Graph& g, int k);

// Largest adjacency eigenvalue to within 1e-14, via the characteristic
// polynomial (permanent-style expansion, exact integer coefficients) and
// exact sign evaluation at dyadic rationals. Supports n <= 6.
double charpoly_lambda1(const Graph& g);

Graph random_graph(int n, std::uint64_t seed, int percent);
Graph random_tree(int n, std::uint64_t seed);

}  // namespace oracles
