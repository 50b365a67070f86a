#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satgraph/connectivity.hpp"
#include "satgraph/graph.hpp"

namespace satgraph {

enum class Family { edge, vertex };
enum class Mode { sat, ex };

enum class Verdict { saturated, contains_member, misses_edge };

struct SaturationReport {
    Family family = Family::edge;
    int k = 0;
    Verdict verdict = Verdict::saturated;
    std::optional<SubgraphWitness> witness;           // contains_member
    std::optional<std::pair<int, int>> missing_edge;  // misses_edge (lex-first)
};

// Saturation for the family of k-edge-connected graphs: no member occurs as
// a subgraph and every non-edge addition creates one.  Complete graphs on
// at most k vertices are vacuously saturated.
SaturationReport is_saturated_edge(const Graph& g, int k);

// Same for the family of k-connected graphs.
SaturationReport is_saturated_vertex(const Graph& g, int k,
                                     int budget = kVertexSubgraphBudget);

struct SearchResult {
    int n = 0;
    int k = 0;
    Family family = Family::edge;
    Mode mode = Mode::sat;
    int value = 0;
    std::vector<Graph> witnesses;  // canonical representatives, key-ascending
    std::uint64_t graphs_examined = 0;
    double elapsed_ms = 0.0;
};

inline constexpr int kEdgeSearchBudget = 8;
inline constexpr int kVertexSearchBudget = 7;

// Exact minimum (sat) or maximum (ex) edge count of a saturated graph on n
// labeled vertices, found by scanning edge counts outward from feasibility
// bounds and enumerating the m-subsets of vertex pairs at each level.
// Witnesses are deduplicated by canonical form.  graphs_examined counts the
// candidates that survived the cheap filters and received a full verdict.
// budget < 0 selects the per-family default; workers > 1 runs the
// OpenMP-chunked kernel, workers <= 1 the serial reference.  The two paths
// produce identical results.
SearchResult search_optimum(int n, int k, Family family, Mode mode,
                            int workers = 1, int budget = -1);

// For an ex-mode edge-family result: every witness has a vertex of degree
// k-1 whose removal leaves a saturated graph with (k-1)(n-1) - C(k, 2)
// edges.
bool check_extremal_structure(const SearchResult& result);

struct LemmaCheck {
    std::string id;
    bool pass = false;
};

// Structural invariants of a verified edge-saturated graph (n >= k + 1):
//   connectivity       edge connectivity is exactly k-1          (n > k)
//   cut-decomposition  both sides of a minimum cut are saturated
//                      or a single vertex                        (k >= 3, n >= k+2)
//   kminus-subgraph    contains K_{k+1} minus an edge            (n >= k+1)
// Only applicable checks are reported.  Throws if g is not saturated.
std::vector<LemmaCheck> lemma_invariant_suite(const Graph& g, int k);

std::int64_t binom2(std::int64_t n);  // n choose 2

}  // namespace satgraph
