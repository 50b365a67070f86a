#include "satgraph/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <unordered_set>
#include <vector>

namespace satgraph {

namespace {

// Unit-capacity flow over the bitset adjacency, restricted to `mask`.
// cap[u][v] never exceeds 2, radj keeps the positive-residual arcs.
struct EdgeFlow {
    std::int8_t cap[kMaxVertices][kMaxVertices];
    VertexSet radj[kMaxVertices];

    void init(const VertexSet* adj, VertexSet mask) {
        for (VertexSet s = mask; s; s &= s - 1) {
            int v = std::countr_zero(s);
            VertexSet nb = adj[v] & mask;
            radj[v] = nb;
            std::memset(cap[v], 0, sizeof(cap[v]));
            for (VertexSet t = nb; t; t &= t - 1) cap[v][std::countr_zero(t)] = 1;
        }
    }

    bool augment(int s, int t) {
        int parent[kMaxVertices];
        VertexSet visited = vbit(s), frontier = visited;
        while (frontier && !((visited >> t) & 1)) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1) {
                int u = std::countr_zero(f);
                VertexSet fresh = radj[u] & ~(visited | next);
                for (VertexSet w = fresh; w; w &= w - 1) parent[std::countr_zero(w)] = u;
                next |= fresh;
            }
            visited |= next;
            frontier = next;
        }
        if (!((visited >> t) & 1)) return false;
        for (int v = t; v != s;) {
            int u = parent[v];
            if (--cap[u][v] == 0) radj[u] &= ~vbit(v);
            if (cap[v][u]++ == 0) radj[v] |= vbit(u);
            v = u;
        }
        return true;
    }

    int maxflow_capped(int s, int t, int limit) {
        int f = 0;
        while (f < limit && augment(s, t)) ++f;
        return f;
    }

    VertexSet reach(int s) const {
        VertexSet visited = vbit(s), frontier = visited;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1) next |= radj[std::countr_zero(f)];
            frontier = next & ~visited;
            visited |= frontier;
        }
        return visited;
    }
};

struct MaskedCut {
    int value;       // min(edge connectivity of the induced graph, cap)
    VertexSet side;  // residual source side, valid iff value < cap
};

// Source is the lowest vertex of the mask; among sinks achieving the
// minimum, the numerically smallest residual source side wins.
MaskedCut min_cut_masked(const VertexSet* adj, VertexSet mask, int cap) {
    EdgeFlow flow;
    int s = std::countr_zero(mask);
    int best = cap;
    std::vector<VertexSet> sides;
    for (VertexSet rest = mask & ~vbit(s); rest; rest &= rest - 1) {
        int t = std::countr_zero(rest);
        int limit = best < cap ? best + 1 : cap;
        if (limit <= 0) break;
        flow.init(adj, mask);
        int f = flow.maxflow_capped(s, t, limit);
        if (f >= limit) continue;  // this sink cannot improve or tie
        if (f < best) {
            best = f;
            sides.clear();
        }
        sides.push_back(flow.reach(s));
    }
    if (sides.empty()) return {cap, 0};
    return {best, *std::min_element(sides.begin(), sides.end())};
}

int min_cut_value_masked(const VertexSet* adj, VertexSet mask, int cap) {
    EdgeFlow flow;
    int s = std::countr_zero(mask);
    int best = cap;
    for (VertexSet rest = mask & ~vbit(s); best > 0 && rest; rest &= rest - 1) {
        int t = std::countr_zero(rest);
        flow.init(adj, mask);
        best = flow.maxflow_capped(s, t, best);
    }
    return best;
}

VertexSet peel_core(const VertexSet* adj, VertexSet mask, int k) {
    bool again = true;
    while (again) {
        again = false;
        for (VertexSet s = mask; s; s &= s - 1) {
            int v = std::countr_zero(s);
            if (std::popcount(adj[v] & mask) < k) {
                mask &= ~vbit(v);
                again = true;
            }
        }
    }
    return mask;
}

bool induced_complete(const VertexSet* adj, VertexSet mask) {
    for (VertexSet s = mask; s; s &= s - 1) {
        int v = std::countr_zero(s);
        if ((adj[v] & mask) != (mask & ~vbit(v))) return false;
    }
    return true;
}

// Max-flow on the vertex-split network (in(v) = 2v, out(v) = 2v + 1).
struct SplitNet {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs, arcs0;  // paired arcs, rev = idx ^ 1
    std::vector<std::vector<int>> out;
    int big = 0;

    void add(int a, int b, int capacity) {
        out[static_cast<size_t>(a)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, capacity});
        out[static_cast<size_t>(b)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    }

    void build(const VertexSet* adj, VertexSet mask) {
        arcs.clear();
        out.assign(2 * kMaxVertices, {});
        big = std::popcount(mask) + 1;
        for (VertexSet s = mask; s; s &= s - 1) {
            int v = std::countr_zero(s);
            add(2 * v, 2 * v + 1, 1);
            VertexSet up = adj[v] & mask;
            up = up >> (v + 1) << (v + 1);
            for (VertexSet t = up; t; t &= t - 1) {
                int w = std::countr_zero(t);
                add(2 * v + 1, 2 * w, big);
                add(2 * w + 1, 2 * v, big);
            }
        }
        arcs0 = arcs;
    }

    void reset() { arcs = arcs0; }

    int maxflow_capped(int s, int t, int limit) {
        int flow = 0;
        std::vector<int> parent_arc(out.size());
        std::vector<int> queue;
        while (flow < limit) {
            std::vector<char> seen(out.size(), 0);
            queue.clear();
            queue.push_back(s);
            seen[static_cast<size_t>(s)] = 1;
            bool found = false;
            for (size_t qi = 0; qi < queue.size() && !found; ++qi) {
                int u = queue[qi];
                for (int ai : out[static_cast<size_t>(u)]) {
                    const Arc& a = arcs[static_cast<size_t>(ai)];
                    if (a.cap <= 0 || seen[static_cast<size_t>(a.to)]) continue;
                    seen[static_cast<size_t>(a.to)] = 1;
                    parent_arc[static_cast<size_t>(a.to)] = ai;
                    if (a.to == t) {
                        found = true;
                        break;
                    }
                    queue.push_back(a.to);
                }
            }
            if (!found) break;
            for (int v = t; v != s;) {
                int ai = parent_arc[static_cast<size_t>(v)];
                arcs[static_cast<size_t>(ai)].cap -= 1;
                arcs[static_cast<size_t>(ai ^ 1)].cap += 1;
                v = arcs[static_cast<size_t>(ai ^ 1)].to;
            }
            ++flow;
        }
        return flow;
    }

    std::vector<char> residual_reach(int s) const {
        std::vector<char> seen(out.size(), 0);
        std::vector<int> queue{s};
        seen[static_cast<size_t>(s)] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int ai : out[static_cast<size_t>(u)]) {
                const Arc& a = arcs[static_cast<size_t>(ai)];
                if (a.cap <= 0 || seen[static_cast<size_t>(a.to)]) continue;
                seen[static_cast<size_t>(a.to)] = 1;
                queue.push_back(a.to);
            }
        }
        return seen;
    }
};

struct MaskedVertexCut {
    int value;      // min(vertex connectivity of the induced graph, cap)
    VertexSet cut;  // valid iff value < cap
};

// Complete induced graphs have no nonadjacent pair and report `cap`.
MaskedVertexCut min_vertex_cut_masked(const VertexSet* adj, VertexSet mask, int cap) {
    SplitNet net;
    net.build(adj, mask);
    int best = cap;
    int bu = -1, bv = -1;
    for (VertexSet s = mask; best > 0 && s; s &= s - 1) {
        int u = std::countr_zero(s);
        VertexSet nonadj = mask & ~adj[u] & ~vbit(u);
        nonadj = nonadj >> (u + 1) << (u + 1);
        for (VertexSet t = nonadj; best > 0 && t; t &= t - 1) {
            int v = std::countr_zero(t);
            net.reset();
            int f = net.maxflow_capped(2 * u + 1, 2 * v, best);
            if (f < best) {
                best = f;
                bu = u;
                bv = v;
            }
        }
    }
    if (best >= cap || bu < 0) return {cap, 0};
    net.reset();
    net.maxflow_capped(2 * bu + 1, 2 * bv, best + 1);
    auto seen = net.residual_reach(2 * bu + 1);
    VertexSet cut = 0;
    for (VertexSet s = mask; s; s &= s - 1) {
        int v = std::countr_zero(s);
        if (seen[static_cast<size_t>(2 * v)] && !seen[static_cast<size_t>(2 * v + 1)])
            cut |= vbit(v);
    }
    return {best, cut};
}

}  // namespace

Cut global_min_edge_cut(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("global_min_edge_cut: need n >= 2");
    MaskedCut mc = min_cut_masked(g.adjacency(), full_set(n), n);
    Cut cut;
    cut.side = mc.side;
    for (VertexSet s = mc.side; s; s &= s - 1) {
        int u = std::countr_zero(s);
        for (VertexSet t = g.neighbors(u) & ~mc.side; t; t &= t - 1) {
            int v = std::countr_zero(t);
            cut.crossing_edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(cut.crossing_edges.begin(), cut.crossing_edges.end());
    return cut;
}

int edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("edge_connectivity: need n >= 2");
    return min_cut_value_masked(g.adjacency(), full_set(n), n);
}

int edge_connectivity_capped(const VertexSet* adj, int n, int cap) {
    if (n < 2) throw std::invalid_argument("edge_connectivity_capped: need n >= 2");
    return min_cut_value_masked(adj, full_set(n), std::min(cap, n));
}

int edge_connectivity_capped(const Graph& g, int cap) {
    return edge_connectivity_capped(g.adjacency(), g.vertex_count(), cap);
}

int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
    VertexSet all = full_set(n);
    if (induced_complete(g.adjacency(), all)) return n - 1;
    return min_vertex_cut_masked(g.adjacency(), all, n).value;
}

std::optional<SubgraphWitness> has_k_edge_connected_subgraph(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("has_k_edge_connected_subgraph: need k >= 1");
    const VertexSet* adj = g.adjacency();

    // A k-edge-connected subgraph lies on one side of any cut smaller
    // than k, so decompose along minimum cuts, peeling the k-core first.
    std::vector<VertexSet> stack{full_set(g.vertex_count())};
    while (!stack.empty()) {
        VertexSet mask = stack.back();
        stack.pop_back();
        for (;;) {
            mask = peel_core(adj, mask, k);
            if (std::popcount(mask) < k + 1) break;
            MaskedCut mc = min_cut_masked(adj, mask, k);
            if (mc.value >= k)
                return SubgraphWitness{mask, WitnessKind::edge_connected, k};
            stack.push_back(mask & ~mc.side);
            mask = mc.side;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<VertexSet> kvc_recurse(const VertexSet* adj, VertexSet mask, int k,
                                     std::unordered_set<VertexSet>& dead) {
    mask = peel_core(adj, mask, k);
    if (std::popcount(mask) < k + 1) return std::nullopt;
    if (dead.count(mask)) return std::nullopt;
    MaskedVertexCut vc = min_vertex_cut_masked(adj, mask, k);
    if (vc.value >= k) return mask;
    VertexSet rest = mask & ~vc.cut;
    while (rest) {
        VertexSet comp = vbit(std::countr_zero(rest)), frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1)
                next |= adj[std::countr_zero(f)] & rest;
            frontier = next & ~comp;
            comp |= frontier;
        }
        if (auto r = kvc_recurse(adj, comp | vc.cut, k, dead)) return r;
        rest &= ~comp;
    }
    dead.insert(mask);
    return std::nullopt;
}

}  // namespace

std::optional<SubgraphWitness> has_k_connected_subgraph(const Graph& g, int k, int budget) {
    if (k < 1) throw std::invalid_argument("has_k_connected_subgraph: need k >= 1");
    if (g.vertex_count() > budget)
        throw budget_error("has_k_connected_subgraph: vertex count " +
                           std::to_string(g.vertex_count()) + " exceeds budget " +
                           std::to_string(budget));
    std::unordered_set<VertexSet> dead;
    if (auto r = kvc_recurse(g.adjacency(), full_set(g.vertex_count()), k, dead))
        return SubgraphWitness{*r, WitnessKind::vertex_connected, k};
    return std::nullopt;
}

namespace {

bool kminus_choose(const Graph& g, int start, int needed, VertexSet chosen, int missing,
                   VertexSet& found) {
    if (needed == 0) {
        found = chosen;
        return true;
    }
    int n = g.vertex_count();
    for (int v = start; v + needed <= n; ++v) {
        int absent = std::popcount(chosen) - std::popcount(g.neighbors(v) & chosen);
        if (missing + absent > 1) continue;
        if (kminus_choose(g, v + 1, needed - 1, chosen | vbit(v), missing + absent, found))
            return true;
    }
    return false;
}

}  // namespace

std::optional<VertexSet> contains_k_minus(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("contains_k_minus: need k >= 2");
    if (g.vertex_count() < k + 1) return std::nullopt;
    VertexSet found = 0;
    if (kminus_choose(g, 0, k + 1, 0, 0, found)) return found;
    return std::nullopt;
}

}  // namespace satgraph
