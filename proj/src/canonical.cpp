#include "satgraph/canonical.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace satgraph {

namespace {

struct Partial {
    std::array<std::uint8_t, 11> order;
    VertexSet used;
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("canonical_key: supports n <= 11");
    if (n <= 1) return 0;

    std::vector<Partial> cur;
    cur.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        Partial p{};
        p.order[0] = static_cast<std::uint8_t>(v);
        p.used = vbit(v);
        cur.push_back(p);
    }

    std::uint64_t key = 0;
    std::vector<Partial> next;
    for (int j = 1; j < n; ++j) {
        std::uint32_t best = ~0u;
        next.clear();
        for (const Partial& p : cur) {
            for (int v = 0; v < n; ++v) {
                if ((p.used >> v) & 1) continue;
                std::uint32_t col = 0;
                VertexSet nb = g.neighbors(v);
                for (int i = 0; i < j; ++i)
                    col = (col << 1) | static_cast<std::uint32_t>((nb >> p.order[static_cast<size_t>(i)]) & 1);
                if (col > best) continue;
                if (col < best) {
                    best = col;
                    next.clear();
                }
                if (next.size() >= 2'000'000)
                    throw std::runtime_error("canonical_key: ordering frontier too large");
                Partial q = p;
                q.order[static_cast<size_t>(j)] = static_cast<std::uint8_t>(v);
                q.used |= vbit(v);
                next.push_back(q);
            }
        }
        key = (key << j) | best;
        cur.swap(next);
    }
    return key;
}

Graph graph_from_key(int n, std::uint64_t key) {
    if (n < 0 || n > 11) throw std::invalid_argument("graph_from_key: supports n <= 11");
    Graph g(n);
    int total = n * (n - 1) / 2;
    int pos = total;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            --pos;
            if ((key >> pos) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace satgraph
