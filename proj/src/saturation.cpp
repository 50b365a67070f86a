#include "satgraph/saturation.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>

#include "satgraph/canonical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace satgraph {

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

SaturationReport is_saturated_edge(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_saturated_edge: need k >= 1");
    SaturationReport rep;
    rep.family = Family::edge;
    rep.k = k;
    if (auto w = has_k_edge_connected_subgraph(g, k)) {
        rep.verdict = Verdict::contains_member;
        rep.witness = w;
        return rep;
    }
    for (auto [u, v] : complement_edges(g)) {
        Graph h = g;
        h.add_edge(u, v);
        if (!has_k_edge_connected_subgraph(h, k)) {
            rep.verdict = Verdict::misses_edge;
            rep.missing_edge = {{u, v}};
            return rep;
        }
    }
    rep.verdict = Verdict::saturated;
    return rep;
}

SaturationReport is_saturated_vertex(const Graph& g, int k, int budget) {
    if (k < 1) throw std::invalid_argument("is_saturated_vertex: need k >= 1");
    SaturationReport rep;
    rep.family = Family::vertex;
    rep.k = k;
    if (auto w = has_k_connected_subgraph(g, k, budget)) {
        rep.verdict = Verdict::contains_member;
        rep.witness = w;
        return rep;
    }
    for (auto [u, v] : complement_edges(g)) {
        Graph h = g;
        h.add_edge(u, v);
        if (!has_k_connected_subgraph(h, k, budget)) {
            rep.verdict = Verdict::misses_edge;
            rep.missing_edge = {{u, v}};
            return rep;
        }
    }
    rep.verdict = Verdict::saturated;
    return rep;
}

namespace {

struct BinomTable {
    std::uint64_t c[67][67];

    BinomTable() {
        for (int a = 0; a <= 66; ++a) {
            c[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
            for (int b = a + 1; b <= 66; ++b) c[a][b] = 0;
        }
    }
};

const BinomTable kBinomTable;

std::uint64_t binom(int a, int b) {
    if (a < 0 || b < 0 || b > a) return 0;
    return kBinomTable.c[a][b];
}

struct LevelSpec {
    int n = 0;
    int k = 0;
    int m = 0;
    int P = 0;
    Family family = Family::edge;
    std::vector<std::pair<int, int>> slots;
    bool need_exact_degree = false;
    int kvc_budget = kVertexSubgraphBudget;
};

struct ChunkOutcome {
    std::set<std::uint64_t> keys;
    std::uint64_t examined = 0;
};

bool next_combination(int* c, int m, int P) {
    int i = m - 1;
    while (i >= 0 && c[i] == P - m + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
    return true;
}

void unrank_combination(int P, int m, std::uint64_t rank, int* c) {
    int v = 0;
    for (int i = 0; i < m; ++i) {
        for (;; ++v) {
            std::uint64_t cnt = binom(P - 1 - v, m - 1 - i);
            if (rank < cnt) {
                c[i] = v++;
                break;
            }
            rank -= cnt;
        }
    }
}

void scan_candidate(const LevelSpec& sp, const int* comb, ChunkOutcome& out) {
    VertexSet adj[12] = {};
    int deg[12] = {};
    const int n = sp.n, k = sp.k;
    for (int i = 0; i < sp.m; ++i) {
        auto [u, v] = sp.slots[static_cast<size_t>(comb[i])];
        adj[u] |= vbit(v);
        adj[v] |= vbit(u);
        ++deg[u];
        ++deg[v];
    }
    int mind = n;
    for (int v = 0; v < n; ++v) mind = std::min(mind, deg[v]);
    if (mind < k - 1) return;
    if (sp.need_exact_degree && mind != k - 1) return;

    VertexSet seen = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    if (seen != full_set(n)) return;

    // Saturated graphs have edge connectivity exactly k-1 in the edge
    // family and at least k-1 in the vertex family.
    int cc = edge_connectivity_capped(adj, n, k);
    if (sp.family == Family::edge ? cc != k - 1 : cc < k - 1) return;

    ++out.examined;
    Graph g(n);
    for (int i = 0; i < sp.m; ++i) {
        auto [u, v] = sp.slots[static_cast<size_t>(comb[i])];
        g.add_edge(u, v);
    }
    SaturationReport rep = sp.family == Family::edge
                               ? is_saturated_edge(g, k)
                               : is_saturated_vertex(g, k, sp.kvc_budget);
    if (rep.verdict == Verdict::saturated) out.keys.insert(canonical_key(g));
}

ChunkOutcome scan_range(const LevelSpec& sp, std::uint64_t lo, std::uint64_t hi) {
    ChunkOutcome out;
    if (lo >= hi) return out;
    int comb[66];
    unrank_combination(sp.P, sp.m, lo, comb);
    for (std::uint64_t r = lo; r < hi; ++r) {
        scan_candidate(sp, comb, out);
        if (r + 1 < hi) next_combination(comb, sp.m, sp.P);
    }
    return out;
}

ChunkOutcome scan_level(const LevelSpec& sp, int workers) {
    std::uint64_t total = binom(sp.P, sp.m);
    if (workers <= 1) return scan_range(sp, 0, total);

    int chunks = workers * 8;
    if (static_cast<std::uint64_t>(chunks) > total) chunks = static_cast<int>(total);
    if (chunks < 1) chunks = 1;
    std::vector<ChunkOutcome> parts(static_cast<size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (int c = 0; c < chunks; ++c) {
        std::uint64_t lo = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(total) * static_cast<unsigned>(c) / static_cast<unsigned>(chunks));
        std::uint64_t hi = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(total) * static_cast<unsigned>(c + 1) / static_cast<unsigned>(chunks));
        parts[static_cast<size_t>(c)] = scan_range(sp, lo, hi);
    }
    ChunkOutcome merged;
    for (auto& p : parts) {
        merged.examined += p.examined;
        merged.keys.merge(p.keys);
    }
    return merged;
}

// Level m can hold a saturated graph only if some cut-side size is
// feasible; when only a singleton side fits, a vertex of degree exactly
// k-1 must exist.
struct LevelFeasibility {
    bool any = false;
    bool only_singleton = false;
};

LevelFeasibility level_feasibility(int n, int k, int m, Family family) {
    LevelFeasibility f;
    std::int64_t P = binom2(n);
    std::vector<int> ok;
    if (family == Family::edge) {
        for (int s = 1; s <= n / 2; ++s)
            if (binom2(s) + binom2(n - s) + (k - 1) >= m) ok.push_back(s);
    } else {
        int parts = n - k + 1;  // vertices outside a minimum vertex cut
        for (int a = 1; a <= parts / 2; ++a)
            if (P - static_cast<std::int64_t>(a) * (parts - a) >= m) ok.push_back(a);
    }
    f.any = !ok.empty();
    f.only_singleton = ok.size() == 1 && ok.front() == 1;
    return f;
}

}  // namespace

SearchResult search_optimum(int n, int k, Family family, Mode mode, int workers,
                            int budget) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("search_optimum: need 1 <= n <= 64");
    if (k < 1) throw std::invalid_argument("search_optimum: need k >= 1");
    if (budget < 0)
        budget = family == Family::edge ? kEdgeSearchBudget : kVertexSearchBudget;

    auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    res.n = n;
    res.k = k;
    res.family = family;
    res.mode = mode;

    if (k == 1) {
        // Only the edgeless graph is saturated: any added edge creates a
        // connected pair.
        res.value = 0;
        res.witnesses.emplace_back(n);
    } else if (n <= k) {
        // No graph on n <= k vertices has a member subgraph, so the only
        // saturated one is the complete graph.
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        res.value = static_cast<int>(binom2(n));
        res.witnesses.push_back(std::move(g));
    } else {
        if (n > budget)
            throw budget_error("search_optimum: n=" + std::to_string(n) +
                               " exceeds budget " + std::to_string(budget));
        if (n > 11)
            throw budget_error("search_optimum: canonical forms support n <= 11");

        LevelSpec sp;
        sp.n = n;
        sp.k = k;
        sp.P = static_cast<int>(binom2(n));
        sp.family = family;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) sp.slots.emplace_back(u, v);

        int m_lo = std::max((n * (k - 1) + 1) / 2, n - 1);
        int m_hi = sp.P - n + k;
        std::vector<int> levels;
        if (mode == Mode::sat)
            for (int m = m_lo; m <= m_hi; ++m) levels.push_back(m);
        else
            for (int m = m_hi; m >= m_lo; --m) levels.push_back(m);

        bool found = false;
        for (int m : levels) {
            LevelFeasibility lf = level_feasibility(n, k, m, family);
            if (!lf.any) continue;
            sp.m = m;
            sp.need_exact_degree = lf.only_singleton;
            ChunkOutcome out = scan_level(sp, workers);
            res.graphs_examined += out.examined;
            if (!out.keys.empty()) {
                res.value = m;
                for (std::uint64_t key : out.keys)
                    res.witnesses.push_back(graph_from_key(n, key));
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("search_optimum: no saturated graph in scan range");
    }

    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return res;
}

bool check_extremal_structure(const SearchResult& result) {
    if (result.family != Family::edge || result.mode != Mode::ex)
        throw std::invalid_argument(
            "check_extremal_structure: needs an edge-family ex result");
    int k = result.k, n = result.n;
    if (n < k + 1)
        throw std::invalid_argument("check_extremal_structure: need n >= k+1");
    std::int64_t want = static_cast<std::int64_t>(k - 1) * (n - 1) - binom2(k);
    for (const Graph& g : result.witnesses) {
        bool ok = false;
        for (int v = 0; v < n && !ok; ++v) {
            if (g.degree(v) != k - 1) continue;
            auto sub = induced_subgraph(g, full_set(n) & ~vbit(v));
            if (sub.graph.edge_count() != want) continue;
            ok = is_saturated_edge(sub.graph, k).verdict == Verdict::saturated;
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<LemmaCheck> lemma_invariant_suite(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("lemma_invariant_suite: need k >= 1");
    int n = g.vertex_count();
    if (n < k + 1)
        throw std::invalid_argument("lemma_invariant_suite: need n >= k+1");
    if (is_saturated_edge(g, k).verdict != Verdict::saturated)
        throw std::invalid_argument("lemma_invariant_suite: input not saturated");

    std::vector<LemmaCheck> out;
    out.push_back({"connectivity", edge_connectivity(g) == k - 1});
    if (k >= 3 && n >= k + 2) {
        Cut cut = global_min_edge_cut(g);
        VertexSet big = cut.side;
        if (2 * std::popcount(big) < n) big = full_set(n) & ~big;
        VertexSet small = full_set(n) & ~big;
        bool ok = cut.size() == k - 1;
        if (ok) {
            auto bigSub = induced_subgraph(g, big);
            ok = std::popcount(big) >= k + 1 &&
                 is_saturated_edge(bigSub.graph, k).verdict == Verdict::saturated;
        }
        if (ok && std::popcount(small) != 1) {
            auto smallSub = induced_subgraph(g, small);
            ok = std::popcount(small) >= k + 1 &&
                 is_saturated_edge(smallSub.graph, k).verdict == Verdict::saturated;
        }
        out.push_back({"cut-decomposition", ok});
    }
    if (k >= 2) out.push_back({"kminus-subgraph", contains_k_minus(g, k).has_value()});
    return out;
}

}  // namespace satgraph
