#pragma once

#include <optional>
#include <stdexcept>

#include "satgraph/graph.hpp"

namespace satgraph {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Global minimum edge cut via max-flow from vertex 0 to every other vertex
// (unit capacities, one arc per direction).  The certificate side always
// contains vertex 0; among sinks achieving the minimum, the numerically
// smallest residual source-side bitset wins.  Disconnected graphs yield a
// size-0 cut.  Requires n >= 2.
Cut global_min_edge_cut(const Graph& g);

int edge_connectivity(const Graph& g);  // n >= 2; 0 when disconnected

// min(edge connectivity, cap) with flows stopped early at cap.
int edge_connectivity_capped(const Graph& g, int cap);
int edge_connectivity_capped(const VertexSet* adj, int n, int cap);

// Max-flow on the vertex-split transformation over all nonadjacent pairs;
// complete graphs short-circuit to n-1.  Requires n >= 2.
int vertex_connectivity(const Graph& g);

enum class WitnessKind { edge_connected, vertex_connected };

struct SubgraphWitness {
    VertexSet verts = 0;
    WitnessKind kind = WitnessKind::edge_connected;
    int level = 0;
};

// Exact search for an induced subgraph with edge connectivity >= k, by
// recursive min-cut decomposition (a subgraph that is k-edge-connected lies
// entirely on one side of any cut smaller than k).  k >= 1.
std::optional<SubgraphWitness> has_k_edge_connected_subgraph(const Graph& g, int k);

// Vertex analogue: recurse on each component of G - C together with the
// minimum vertex cut C, memoizing dead vertex sets.  k >= 1; vertex count
// must stay within `budget` (throws budget_error otherwise).
inline constexpr int kVertexSubgraphBudget = 20;
std::optional<SubgraphWitness> has_k_connected_subgraph(const Graph& g, int k,
                                                        int budget = kVertexSubgraphBudget);

// First (k+1)-subset, in lexicographic order, inducing at least
// C(k+1, 2) - 1 edges.  k >= 2.
std::optional<VertexSet> contains_k_minus(const Graph& g, int k);

}  // namespace satgraph
