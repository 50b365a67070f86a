#include "satgraph/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace satgraph {

namespace {

constexpr int kMaxIters = 1'000'000;

// Power iteration on M+I where M is given by a matvec; returns the
// largest eigenvalue of M. M must have nonnegative entries and a
// nonnegative dominant eigenvector (adjacency and quotient matrices do).
template <typename MatVec>
double shifted_power_iteration(int dim, MatVec&& matvec, double tol) {
    std::vector<double> x(static_cast<size_t>(dim), 1.0), y(static_cast<size_t>(dim));
    double prev = 0.0;
    for (int it = 0; it < kMaxIters; ++it) {
        matvec(x.data(), y.data());
        for (int i = 0; i < dim; ++i) y[static_cast<size_t>(i)] += x[static_cast<size_t>(i)];
        double num = 0.0, den = 0.0;
        for (int i = 0; i < dim; ++i) {
            num += y[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
            den += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        }
        double r = num / den;
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::runtime_error("power iteration hit a zero vector");
        for (int i = 0; i < dim; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / norm;
        if (it > 0 && std::abs(r - prev) <= tol * std::max(1.0, std::abs(r)))
            return r - 1.0;
        prev = r;
    }
    throw std::runtime_error("power iteration did not converge");
}

std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    VertexSet left = full_set(n);
    while (left) {
        VertexSet seen = left & -left, frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1)
                next |= g.neighbors(std::countr_zero(f));
            frontier = next & ~seen;
            seen |= frontier;
        }
        comps.push_back(seen);
        left &= ~seen;
    }
    return comps;
}

}  // namespace

double spectral_radius(const Graph& g, double tol) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("spectral_radius: empty graph");
    if (g.edge_count() == 0) return 0.0;
    double best = 0.0;
    for (VertexSet comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        const Graph& h = sub.graph;
        int d = h.vertex_count();
        if (h.edge_count() == 0) continue;
        const VertexSet* adj = h.adjacency();
        double lam = shifted_power_iteration(
            d,
            [adj, d](const double* x, double* y) {
                for (int i = 0; i < d; ++i) {
                    double s = 0.0;
                    for (VertexSet a = adj[i]; a; a &= a - 1)
                        s += x[std::countr_zero(a)];
                    y[i] = s;
                }
            },
            tol);
        best = std::max(best, lam);
    }
    return best;
}

DegreeBounds degree_bounds_check(const Graph& g, double tol) {
    DegreeBounds b;
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("degree_bounds_check: empty graph");
    DegreeProfile prof = degree_profile(g);
    b.average_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
    b.max_degree = prof.max_degree;
    b.lambda1 = spectral_radius(g, tol);
    b.regular = prof.min_degree == prof.max_degree;
    return b;
}

std::optional<QuotientMatrix> is_equitable(const Graph& g, const Partition& p) {
    int n = g.vertex_count();
    int t = static_cast<int>(p.blocks.size());
    if (t == 0) throw std::invalid_argument("is_equitable: no blocks");
    VertexSet all = 0;
    for (VertexSet b : p.blocks) {
        if (b == 0) throw std::invalid_argument("is_equitable: empty block");
        if (b & all) throw std::invalid_argument("is_equitable: overlapping blocks");
        all |= b;
    }
    if (all != full_set(n))
        throw std::invalid_argument("is_equitable: blocks do not cover the vertex set");

    QuotientMatrix q;
    q.t = t;
    q.entries.assign(static_cast<size_t>(t), std::vector<double>(static_cast<size_t>(t), 0.0));
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            int want = -1;
            for (VertexSet b = p.blocks[static_cast<size_t>(i)]; b; b &= b - 1) {
                int v = std::countr_zero(b);
                int cnt = std::popcount(g.neighbors(v) & p.blocks[static_cast<size_t>(j)]);
                if (want < 0)
                    want = cnt;
                else if (cnt != want)
                    return std::nullopt;
            }
            q.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = want;
        }
    }
    return q;
}

double quotient_spectral_radius(const QuotientMatrix& q, double tol) {
    int t = q.t;
    if (t < 1 || q.entries.size() != static_cast<size_t>(t))
        throw std::invalid_argument("quotient_spectral_radius: bad matrix shape");
    for (auto& row : q.entries) {
        if (row.size() != static_cast<size_t>(t))
            throw std::invalid_argument("quotient_spectral_radius: bad matrix shape");
        for (double e : row)
            if (e < 0.0)
                throw std::invalid_argument("quotient_spectral_radius: negative entry");
    }
    bool all_zero = true;
    for (auto& row : q.entries)
        for (double e : row)
            if (e != 0.0) all_zero = false;
    if (all_zero) return 0.0;
    const auto& m = q.entries;
    return shifted_power_iteration(
        t,
        [&m, t](const double* x, double* y) {
            for (int i = 0; i < t; ++i) {
                double s = 0.0;
                for (int j = 0; j < t; ++j)
                    s += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[j];
                y[i] = s;
            }
        },
        tol);
}

double saturated_spectral_floor(int k) {
    if (k < 1) throw std::invalid_argument("saturated_spectral_floor: need k >= 1");
    double kd = k;
    return (kd - 2.0 + std::sqrt(kd * kd + 4.0 * kd - 4.0)) / 2.0;
}

}  // namespace satgraph
