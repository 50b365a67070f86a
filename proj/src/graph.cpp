#include "satgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace satgraph {

int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_vertices(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count must be in [0, 64]");
    adj_.assign(static_cast<size_t>(n), 0);
}

VertexSet Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors: bad vertex");
    return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("Graph::has_edge: bad vertex");
    return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("Graph::add_edge: bad vertex");
    if (u == v) throw std::invalid_argument("Graph::add_edge: loops rejected");
    if ((adj_[static_cast<size_t>(u)] >> v) & 1) return;
    adj_[static_cast<size_t>(u)] |= vbit(v);
    adj_[static_cast<size_t>(v)] |= vbit(u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        VertexSet rest = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
        for (VertexSet s = rest; s; s &= s - 1)
            out.emplace_back(u, std::countr_zero(s));
    }
    return out;
}

std::vector<std::pair<int, int>> complement_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        VertexSet missing = full_set(n) & ~g.neighbors(u) & ~vbit(u);
        missing = missing >> (u + 1) << (u + 1);
        for (VertexSet s = missing; s; s &= s - 1)
            out.emplace_back(u, std::countr_zero(s));
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet verts) {
    if (verts & ~full_set(g.vertex_count()))
        throw std::invalid_argument("induced_subgraph: vertex set out of range");
    InducedSubgraph out;
    out.labels = set_vertices(verts);
    int s = static_cast<int>(out.labels.size());
    out.graph = Graph(s);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (g.has_edge(out.labels[static_cast<size_t>(i)],
                           out.labels[static_cast<size_t>(j)]))
                out.graph.add_edge(i, j);
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("degree_profile: empty graph");
    DegreeProfile p;
    p.degrees.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) p.degrees.push_back(g.degree(v));
    std::sort(p.degrees.begin(), p.degrees.end());
    p.min_degree = p.degrees.front();
    p.max_degree = p.degrees.back();
    return p;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("is_connected: empty graph");
    VertexSet seen = vbit(0), frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1)
            next |= g.neighbors(std::countr_zero(s));
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == full_set(n);
}

bool validate_graph(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t degsum = 0;
    for (int v = 0; v < n; ++v) {
        VertexSet nb = g.neighbors(v);
        if (nb & ~full_set(n)) return false;
        if ((nb >> v) & 1) return false;
        for (VertexSet s = nb; s; s &= s - 1)
            if (!((g.neighbors(std::countr_zero(s)) >> v) & 1)) return false;
        degsum += static_cast<std::uint64_t>(std::popcount(nb));
    }
    return degsum == 2 * static_cast<std::uint64_t>(g.edge_count());
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header");
    if (n < 0 || n > kMaxVertices)
        throw std::runtime_error("edge list: vertex count out of range");
    if (m < 0 || m > n * (n - 1) / 2)
        throw std::runtime_error("edge list: edge count out of range");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("edge list: endpoint out of range");
        if (u == v) throw std::runtime_error("edge list: loop rejected");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

}  // namespace satgraph
