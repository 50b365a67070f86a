#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "satgraph/rng.hpp"

namespace oracles {

using satgraph::full_set;
using satgraph::vbit;

namespace {

int crossing_count(const Graph& g, VertexSet side) {
    int n = g.vertex_count();
    int c = 0;
    for (int v = 0; v < n; ++v)
        if (side & vbit(v)) c += std::popcount(g.neighbors(v) & ~side);
    return c;
}

bool connected_after_removal(const Graph& g, VertexSet removed) {
    int n = g.vertex_count();
    VertexSet left = full_set(n) & ~removed;
    if (left == 0) return true;
    VertexSet seen = left & -left, frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1)
            next |= g.neighbors(std::countr_zero(f));
        frontier = next & ~seen & left;
        seen |= frontier;
    }
    return seen == left;
}

bool subgraph_k_edge_connected(const Graph& g, VertexSet verts, int k) {
    auto sub = satgraph::induced_subgraph(g, verts);
    const Graph& h = sub.graph;
    int n = h.vertex_count();
    if (n < 2) return false;
    int best = 1 << 30;
    for (VertexSet side = 1; side < full_set(n); side += 2)  // keep vertex 0 inside
        best = std::min(best, crossing_count(h, side));
    return best >= k;
}

bool subgraph_k_connected(const Graph& g, VertexSet verts, int k) {
    auto sub = satgraph::induced_subgraph(g, verts);
    const Graph& h = sub.graph;
    int n = h.vertex_count();
    if (n < k + 1) return false;
    for (VertexSet cut = 0; cut < full_set(n); ++cut) {
        if (std::popcount(cut) >= k) continue;
        VertexSet rest = full_set(n) & ~cut;
        if (std::popcount(rest) < 2) continue;
        if (!connected_after_removal(h, cut)) return false;
    }
    return true;
}

}  // namespace

std::pair<int, VertexSet> brute_min_edge_cut(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("brute_min_edge_cut: need n >= 2");
    int best = 1 << 30;
    VertexSet best_side = 0;
    for (VertexSet side = 1; side < full_set(n); side += 2) {
        int c = crossing_count(g, side);
        if (c < best || (c == best && side < best_side)) {
            best = c;
            best_side = side;
        }
    }
    return {best, best_side};
}

int brute_edge_connectivity(const Graph& g) { return brute_min_edge_cut(g).first; }

int brute_vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("brute_vertex_connectivity: need n >= 2");
    for (int size = 0; size <= n - 2; ++size)
        for (VertexSet cut = 0; cut < full_set(n); ++cut) {
            if (std::popcount(cut) != size) continue;
            if (!connected_after_removal(g, cut)) return size;
        }
    return n - 1;
}

bool brute_has_k_edge_connected_subgraph(const Graph& g, int k) {
    int n = g.vertex_count();
    for (VertexSet verts = 0; verts <= full_set(n); ++verts) {
        if (std::popcount(verts) < 2) continue;
        if (subgraph_k_edge_connected(g, verts, k)) return true;
        if (verts == full_set(n)) break;
    }
    return false;
}

bool brute_has_k_connected_subgraph(const Graph& g, int k) {
    int n = g.vertex_count();
    for (VertexSet verts = 0; verts <= full_set(n); ++verts) {
        if (std::popcount(verts) < k + 1) continue;
        if (subgraph_k_connected(g, verts, k)) return true;
        if (verts == full_set(n)) break;
    }
    return false;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients of det(xI - A), index = power of x. Exact, via signed
// expansion over all permutations; fine for n <= 6.
std::vector<std::int64_t> charpoly(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::int64_t> coeff(static_cast<size_t>(n) + 1, 0);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int fixed = 0;
        bool zero = false;
        int inversions = 0;
        for (int i = 0; i < n && !zero; ++i) {
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
            int pi = perm[static_cast<size_t>(i)];
            if (pi == i)
                ++fixed;
            else if (!g.has_edge(i, pi))
                zero = true;
        }
        if (!zero) {
            int sign = inversions % 2 == 0 ? 1 : -1;
            int off = n - fixed;  // each off-diagonal entry contributes -1
            coeff[static_cast<size_t>(fixed)] += sign * (off % 2 == 0 ? 1 : -1);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coeff;
}

// True iff x = num / 2^shift lies strictly above every root: a monic
// real-rooted polynomial and all its derivatives are positive there.
bool strictly_above_roots(const std::vector<std::int64_t>& coeff, std::int64_t num,
                          int shift) {
    int n = static_cast<int>(coeff.size()) - 1;
    std::vector<BigInt> c(coeff.begin(), coeff.end());
    for (int order = 0; order < n; ++order) {
        // evaluate sum c[i] * num^i * 2^(shift*(deg-i)) where deg = n-order
        int deg = n - order;
        BigInt val = 0;
        BigInt p = 1;  // num^i
        for (int i = 0; i <= deg; ++i) {
            BigInt scale = BigInt(1) << static_cast<unsigned>(shift * (deg - i));
            val += c[static_cast<size_t>(i)] * p * scale;
            p *= num;
        }
        if (val <= 0) return false;
        // differentiate
        for (int i = 0; i < deg; ++i)
            c[static_cast<size_t>(i)] = c[static_cast<size_t>(i) + 1] * (i + 1);
        c[static_cast<size_t>(deg)] = 0;
    }
    return true;
}

}  // namespace

double charpoly_lambda1(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1 || n > 6)
        throw std::invalid_argument("charpoly_lambda1: supports 1 <= n <= 6");
    auto coeff = charpoly(g);
    // bisect on dyadic rationals: lo strictly below lambda1+epsilon region,
    // hi strictly above; invariant: predicate(hi) true, predicate(lo) false
    const int shift = 60;
    std::int64_t lo = -(std::int64_t(1) << shift);               // x = -1
    std::int64_t hi = std::int64_t(n) << shift;                  // x = n
    for (int step = 0; step < 64; ++step) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (strictly_above_roots(coeff, mid, shift))
            hi = mid;
        else
            lo = mid;
    }
    return static_cast<double>(hi) / static_cast<double>(std::int64_t(1) << shift);
}

Graph random_graph(int n, std::uint64_t seed, int percent) {
    satgraph::SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_below(100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    satgraph::SplitMix64 rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v))));
    return g;
}

}  // namespace oracles
