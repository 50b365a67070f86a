#include "satgraph/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "satgraph/rng.hpp"

namespace satgraph {

std::int64_t rho(int k, std::int64_t n) {
    if (k < 1 || n < 1) throw std::invalid_argument("rho: need k >= 1, n >= 1");
    std::int64_t pairs = static_cast<std::int64_t>(k - 1) * (k - 2) / 2;
    return static_cast<std::int64_t>(k - 1) * (n - 1) - (n / (k + 1)) * pairs;
}

Graph build_k_minus(int k) {
    if (k < 2) throw std::invalid_argument("build_k_minus: need k >= 2");
    if (k + 1 > kMaxVertices) throw std::invalid_argument("build_k_minus: too large");
    Graph g(k + 1);
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v)
            if (!(u == 0 && v == k)) g.add_edge(u, v);
    return g;
}

Graph build_complete_split(int n, int k) {
    if (k < 1 || n < k)
        throw std::invalid_argument("build_complete_split: need n >= k >= 1");
    if (n > kMaxVertices) throw std::invalid_argument("build_complete_split: too large");
    Graph g(n);
    for (int u = 0; u < k - 1; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::pair<Graph, GknLayout> build_gkn(int k, int n) {
    if (k < 3) throw std::invalid_argument("build_gkn: need k >= 3");
    if (n < k + 1) throw std::invalid_argument("build_gkn: need n >= k + 1");
    if (n > kMaxVertices) throw std::invalid_argument("build_gkn: too large");

    GknLayout lay;
    lay.k = k;
    lay.n = n;
    lay.t = n / (k + 1);
    lay.r = n - lay.t * (k + 1);

    Graph g(n);
    for (int i = 0; i < lay.t; ++i) {
        int off = i * (k + 1);
        std::vector<int> block;
        for (int j = 0; j <= k; ++j) block.push_back(off + j);
        lay.blocks.push_back(block);
        for (int a = 0; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b)
                if (!(a == 0 && b == k)) g.add_edge(off + a, off + b);
    }
    // Ladder edges between consecutive blocks at positions 1..k+1 except 2
    // and k (1-based), i.e. 0-based j in {0..k} minus {1, k-1}.
    for (int i = 0; i + 1 < lay.t; ++i) {
        int off = i * (k + 1);
        for (int j = 0; j <= k; ++j) {
            if (j == 1 || j == k - 1) continue;
            g.add_edge(off + j, off + (k + 1) + j);
        }
    }
    // Tail vertices see the middle of the last block.
    int last = (lay.t - 1) * (k + 1);
    for (int j = 0; j < lay.r; ++j) {
        int w = lay.t * (k + 1) + j;
        lay.tail.push_back(w);
        for (int a = 1; a < k; ++a) g.add_edge(w, last + a);
    }
    return {std::move(g), std::move(lay)};
}

Graph build_k_tree(int q, int n, const std::vector<std::vector<int>>& attachments) {
    if (q < 1) throw std::invalid_argument("build_k_tree: need q >= 1");
    if (n < q) throw std::invalid_argument("build_k_tree: need n >= q");
    if (n > kMaxVertices) throw std::invalid_argument("build_k_tree: too large");
    if (attachments.size() != static_cast<size_t>(n - q))
        throw std::invalid_argument("build_k_tree: need one attachment per added vertex");

    Graph g(n);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) g.add_edge(u, v);
    for (int v = q; v < n; ++v) {
        const auto& at = attachments[static_cast<size_t>(v - q)];
        if (at.size() != static_cast<size_t>(q))
            throw std::invalid_argument("build_k_tree: attachment size must be q");
        for (size_t a = 0; a < at.size(); ++a) {
            if (at[a] < 0 || at[a] >= v)
                throw std::invalid_argument("build_k_tree: attachment vertex out of range");
            for (size_t b = a + 1; b < at.size(); ++b)
                if (at[a] == at[b] || !g.has_edge(at[a], at[b]))
                    throw std::invalid_argument("build_k_tree: attachment is not a clique");
        }
        for (int u : at) g.add_edge(u, v);
    }
    return g;
}

Graph build_k_tree_seeded(int q, int n, std::uint64_t seed) {
    if (q < 1) throw std::invalid_argument("build_k_tree_seeded: need q >= 1");
    if (n < q) throw std::invalid_argument("build_k_tree_seeded: need n >= q");

    SplitMix64 rng(seed);
    std::vector<std::vector<int>> cliques;
    std::vector<int> base;
    for (int u = 0; u < q; ++u) base.push_back(u);
    cliques.push_back(base);

    std::vector<std::vector<int>> attachments;
    for (int v = q; v < n; ++v) {
        const std::vector<int> chosen =
            cliques[static_cast<size_t>(rng.next_below(cliques.size()))];
        attachments.push_back(chosen);
        for (int i = 0; i < q; ++i) {
            std::vector<int> next;
            for (int j = 0; j < q; ++j)
                if (j != i) next.push_back(chosen[static_cast<size_t>(j)]);
            next.push_back(v);
            std::sort(next.begin(), next.end());
            cliques.push_back(std::move(next));
        }
    }
    return build_k_tree(q, n, attachments);
}

}  // namespace satgraph
