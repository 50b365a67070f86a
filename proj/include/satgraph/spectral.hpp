#pragma once

#include <optional>
#include <vector>

#include "satgraph/graph.hpp"

namespace satgraph {

// Ordered partition of the vertex set into nonempty blocks.
struct Partition {
    std::vector<VertexSet> blocks;
};

// entries[i][j] = number of neighbours a vertex of block i has in block j.
struct QuotientMatrix {
    int t = 0;
    std::vector<std::vector<double>> entries;
};

// Largest adjacency eigenvalue, computed per component by power iteration
// on A+I (shifting keeps the iteration from oscillating on bipartite
// components). Throws std::runtime_error if it fails to converge.
double spectral_radius(const Graph& g, double tol = 1e-10);

struct DegreeBounds {
    double average_degree = 0.0;
    int max_degree = 0;
    double lambda1 = 0.0;
    bool regular = false;
};

// Checks avg(deg) <= lambda1 <= max(deg), with equality iff regular
// (on a connected graph).
DegreeBounds degree_bounds_check(const Graph& g, double tol = 1e-10);

// Returns the quotient matrix if the partition is equitable, nullopt if
// not. Throws std::invalid_argument if the blocks do not partition the
// vertex set or one is empty.
std::optional<QuotientMatrix> is_equitable(const Graph& g, const Partition& p);

// Largest eigenvalue of a (componentwise) nonnegative quotient matrix by
// power iteration on Q+I. Throws std::invalid_argument on negative
// entries, std::runtime_error on non-convergence.
double quotient_spectral_radius(const QuotientMatrix& q, double tol = 1e-10);

// (k - 2 + sqrt(k*k + 4*k - 4)) / 2: every nontrivially saturated graph
// has spectral radius at least this, with equality exactly for the
// near-complete graph on k+1 vertices.
double saturated_spectral_floor(int k);

}  // namespace satgraph
