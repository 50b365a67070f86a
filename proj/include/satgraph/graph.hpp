#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace satgraph {

// Vertices are dense labels 0..n-1 with n <= 64, so every vertex set is a
// single machine word.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

int lowest_vertex(VertexSet s);
int set_size(VertexSet s);
std::vector<int> set_vertices(VertexSet s);

// Simple undirected graph: no loops, no multiedges.  Construction mutates,
// analysis never does.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    VertexSet neighbors(int v) const;
    const VertexSet* adjacency() const { return adj_.data(); }
    bool has_edge(int u, int v) const;
    int degree(int v) const;

    // Idempotent; rejects loops and out-of-range endpoints.
    void add_edge(int u, int v);

    // Edges as (u, v) with u < v, ascending lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Non-edges {u, v}, u < v, ascending lexicographic.
std::vector<std::pair<int, int>> complement_edges(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;  // labels[new vertex] = old vertex
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet verts);

struct DegreeProfile {
    int min_degree;
    int max_degree;
    std::vector<int> degrees;  // sorted ascending
};

DegreeProfile degree_profile(const Graph& g);  // n >= 1

bool is_connected(const Graph& g);  // n >= 1

// Internal consistency: adjacency symmetric, loopless, no stray bits,
// cached edge count correct.
bool validate_graph(const Graph& g);

// Vertex bipartition certificate for edge cuts.
struct Cut {
    VertexSet side = 0;
    std::vector<std::pair<int, int>> crossing_edges;
    int size() const { return static_cast<int>(crossing_edges.size()); }
};

// Canonical edge-list text: "n m" then m lines "u v" with u < v, ascending.
// The writer is bit-exact; the reader also accepts unordered and duplicated
// pairs.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

}  // namespace satgraph
