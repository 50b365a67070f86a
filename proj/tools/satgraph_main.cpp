#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satgraph/canonical.hpp"
#include "satgraph/connectivity.hpp"
#include "satgraph/constructions.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/spectral.hpp"

using namespace satgraph;

namespace {

// Exit codes: 0 ok, 1 bad input, 2 contains a member, 3 misses an edge,
// 4 over budget, 5 partition not equitable, 6 searched value contradicts
// the closed form.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitContains = 2;
constexpr int kExitMisses = 3;
constexpr int kExitBudget = 4;
constexpr int kExitNotEquitable = 5;
constexpr int kExitFormula = 6;

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string json_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string json_vertex_list(VertexSet s) {
    std::string out = "[";
    bool first = true;
    for (int v : set_vertices(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "]";
}

std::string json_witness(const SubgraphWitness& w) {
    std::string kind = w.kind == WitnessKind::edge_connected ? "edge-connected"
                                                             : "vertex-connected";
    return "{\"vertices\":" + json_vertex_list(w.verts) + ",\"kind\":\"" + kind +
           "\",\"level\":" + std::to_string(w.level) + "}";
}

const char* family_name(Family f) { return f == Family::edge ? "edge" : "vertex"; }

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

// Budget resolution: flag beats SATGRAPH_BUDGET_NODES beats the default.
int resolve_budget(int flag_value, int fallback) {
    if (flag_value >= 0) return flag_value;
    if (const char* env = std::getenv("SATGRAPH_BUDGET_NODES")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

struct ConstructArgs {
    std::string type;
    int k = 3;
    int n = -1;
    std::uint64_t seed = 0;
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    Graph g(0);
    std::string layout_json;
    if (a.type == "gkn") {
        if (a.n < 0) throw std::invalid_argument("construct gkn: --n required");
        auto [graph, lay] = build_gkn(a.k, a.n);
        g = std::move(graph);
        std::string blocks = "[";
        for (size_t i = 0; i < lay.blocks.size(); ++i) {
            if (i) blocks += ",";
            blocks += "[";
            for (size_t j = 0; j < lay.blocks[i].size(); ++j) {
                if (j) blocks += ",";
                blocks += std::to_string(lay.blocks[i][j]);
            }
            blocks += "]";
        }
        blocks += "]";
        std::string tail = "[";
        for (size_t i = 0; i < lay.tail.size(); ++i) {
            if (i) tail += ",";
            tail += std::to_string(lay.tail[i]);
        }
        tail += "]";
        layout_json = "{\"k\":" + std::to_string(lay.k) + ",\"n\":" +
                      std::to_string(lay.n) + ",\"t\":" + std::to_string(lay.t) +
                      ",\"r\":" + std::to_string(lay.r) + ",\"blocks\":" + blocks +
                      ",\"tail\":" + tail + "}";
    } else if (a.type == "split") {
        if (a.n < 0) throw std::invalid_argument("construct split: --n required");
        g = build_complete_split(a.n, a.k);
    } else if (a.type == "kminus") {
        if (a.n >= 0)
            throw std::invalid_argument("construct kminus: --n is implied by --k");
        g = build_k_minus(a.k);
    } else if (a.type == "ktree") {
        if (a.n < 0) throw std::invalid_argument("construct ktree: --n required");
        g = build_k_tree_seeded(a.k - 1, a.n, a.seed);
    } else {
        throw std::invalid_argument("construct: unknown --type " + a.type);
    }

    std::string text = write_edge_list(g);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out);
        if (!f) throw std::runtime_error("cannot write " + a.out);
        f << text;
        if (!layout_json.empty()) {
            std::ofstream lf(a.out + ".layout.json");
            if (!lf) throw std::runtime_error("cannot write " + a.out + ".layout.json");
            lf << layout_json << "\n";
        }
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string in;
    std::string family = "edge";
    int k = 3;
    int budget = -1;
};

int run_verify(const VerifyArgs& a) {
    Graph g = load_graph(a.in);
    SaturationReport rep;
    if (a.family == "edge") {
        rep = is_saturated_edge(g, a.k);
    } else if (a.family == "vertex") {
        rep = is_saturated_vertex(g, a.k,
                                  resolve_budget(a.budget, kVertexSubgraphBudget));
    } else {
        throw std::invalid_argument("verify: --family must be edge or vertex");
    }

    std::string verdict = rep.verdict == Verdict::saturated ? "saturated"
                          : rep.verdict == Verdict::contains_member
                              ? "contains-member"
                              : "misses-edge";
    std::string json = "{\"family\":\"" + std::string(family_name(rep.family)) +
                       "\",\"k\":" + std::to_string(rep.k) + ",\"n\":" +
                       std::to_string(g.vertex_count()) + ",\"m\":" +
                       std::to_string(g.edge_count()) + ",\"verdict\":\"" + verdict +
                       "\"";
    if (rep.witness) json += ",\"witness\":" + json_witness(*rep.witness);
    if (rep.missing_edge)
        json += ",\"missing_edge\":[" + std::to_string(rep.missing_edge->first) +
                "," + std::to_string(rep.missing_edge->second) + "]";
    json += "}";
    std::cout << json << "\n";

    if (rep.verdict == Verdict::contains_member) return kExitContains;
    if (rep.verdict == Verdict::misses_edge) return kExitMisses;
    return kExitOk;
}

struct SearchArgs {
    int n = 0;
    int k = 3;
    std::string family = "edge";
    std::string mode = "sat";
    int workers = 1;
    int budget = -1;
};

int run_search(const SearchArgs& a) {
    Family fam;
    if (a.family == "edge")
        fam = Family::edge;
    else if (a.family == "vertex")
        fam = Family::vertex;
    else
        throw std::invalid_argument("search: --family must be edge or vertex");
    Mode mode;
    if (a.mode == "sat")
        mode = Mode::sat;
    else if (a.mode == "ex")
        mode = Mode::ex;
    else
        throw std::invalid_argument("search: --mode must be sat or ex");

    int fallback = fam == Family::edge ? kEdgeSearchBudget : kVertexSearchBudget;
    SearchResult r =
        search_optimum(a.n, a.k, fam, mode, a.workers, resolve_budget(a.budget, fallback));

    std::string wits = "[";
    for (size_t i = 0; i < r.witnesses.size(); ++i) {
        if (i) wits += ",";
        wits += "\"" + json_escape(write_edge_list(r.witnesses[i])) + "\"";
    }
    wits += "]";
    std::cout << "{\"n\":" << r.n << ",\"k\":" << r.k << ",\"family\":\""
              << family_name(r.family) << "\",\"mode\":\""
              << (r.mode == Mode::sat ? "sat" : "ex") << "\",\"value\":" << r.value
              << ",\"witnesses\":" << wits
              << ",\"graphs_examined\":" << r.graphs_examined
              << ",\"elapsed_ms\":" << json_double(r.elapsed_ms) << "}\n";

    // Cross-check the edge family against the closed forms.
    if (fam == Family::edge && a.n >= a.k + 1) {
        std::int64_t expect = mode == Mode::sat
                                  ? rho(a.k, a.n)
                                  : static_cast<std::int64_t>(a.k - 1) * a.n -
                                        binom2(a.k);
        if (r.value != expect) {
            std::cerr << "searched value " << r.value
                      << " contradicts the closed form " << expect << "\n";
            return kExitFormula;
        }
    }
    return kExitOk;
}

struct TableArgs {
    int k = 3;
    int n_max = 8;
    int workers = 1;
    int budget = -1;
};

int run_table(const TableArgs& a) {
    if (a.k < 2) throw std::invalid_argument("table: need --k >= 2");
    int budget = resolve_budget(a.budget, kEdgeSearchBudget);
    std::cout << "n,rho_formula,sat_searched,ex_formula,ex_searched,gap\n";
    for (int n = a.k + 1; n <= a.n_max; ++n) {
        std::int64_t rho_f = rho(a.k, n);
        std::int64_t ex_f = static_cast<std::int64_t>(a.k - 1) * n - binom2(a.k);
        std::string sat_s, ex_s;
        if (n <= budget) {
            sat_s = std::to_string(
                search_optimum(n, a.k, Family::edge, Mode::sat, a.workers, budget).value);
            ex_s = std::to_string(
                search_optimum(n, a.k, Family::edge, Mode::ex, a.workers, budget).value);
        }
        std::cout << n << "," << rho_f << "," << sat_s << "," << ex_f << ","
                  << ex_s << "," << (ex_f - rho_f) << "\n";
    }
    return kExitOk;
}

struct SpectralArgs {
    std::string in;
    std::string partition;
    int k = 0;
    double tol = 1e-10;
};

int run_spectral(const SpectralArgs& a) {
    Graph g = load_graph(a.in);
    double lam = spectral_radius(g, a.tol);
    DegreeBounds b = degree_bounds_check(g, a.tol);
    std::string json = "{\"n\":" + std::to_string(g.vertex_count()) + ",\"m\":" +
                       std::to_string(g.edge_count()) + ",\"lambda1\":" +
                       json_double(lam) + ",\"average_degree\":" +
                       json_double(b.average_degree) + ",\"max_degree\":" +
                       std::to_string(b.max_degree) + ",\"regular\":" +
                       (b.regular ? "true" : "false");
    if (a.k >= 1) {
        double floor = saturated_spectral_floor(a.k);
        json += ",\"floor\":" + json_double(floor) + ",\"above_floor\":" +
                (lam >= floor - 100 * a.tol ? "true" : "false");
    }

    bool equitable_failed = false;
    if (!a.partition.empty()) {
        std::ifstream pf(a.partition);
        if (!pf) throw std::runtime_error("cannot open " + a.partition);
        Partition part;
        std::string line;
        while (std::getline(pf, line)) {
            std::istringstream ls(line);
            VertexSet block = 0;
            int v;
            while (ls >> v) {
                if (v < 0 || v >= g.vertex_count())
                    throw std::runtime_error("partition: vertex out of range");
                block |= vbit(v);
            }
            if (block) part.blocks.push_back(block);
        }
        auto q = is_equitable(g, part);
        if (!q) {
            json += ",\"equitable\":false";
            equitable_failed = true;
        } else {
            double qlam = quotient_spectral_radius(*q, a.tol);
            bool agrees = std::abs(qlam - lam) <= 100 * a.tol * std::max(1.0, lam);
            json += ",\"equitable\":true,\"blocks\":" + std::to_string(q->t) +
                    ",\"quotient_lambda1\":" + json_double(qlam) + ",\"agrees\":" +
                    (agrees ? "true" : "false");
        }
    }
    json += "}";
    std::cout << json << "\n";
    return equitable_failed ? kExitNotEquitable : kExitOk;
}

struct AnalyzeArgs {
    std::string in;
    int k = 0;
    int budget = -1;
};

int run_analyze(const AnalyzeArgs& a) {
    Graph g = load_graph(a.in);
    if (g.vertex_count() < 2)
        throw std::invalid_argument("analyze: need at least 2 vertices");
    DegreeProfile prof = degree_profile(g);
    Cut cut = global_min_edge_cut(g);
    std::string edges = "[";
    for (size_t i = 0; i < cut.crossing_edges.size(); ++i) {
        if (i) edges += ",";
        edges += "[" + std::to_string(cut.crossing_edges[i].first) + "," +
                 std::to_string(cut.crossing_edges[i].second) + "]";
    }
    edges += "]";
    std::string json = "{\"n\":" + std::to_string(g.vertex_count()) + ",\"m\":" +
                       std::to_string(g.edge_count()) + ",\"connected\":" +
                       (is_connected(g) ? "true" : "false") + ",\"min_degree\":" +
                       std::to_string(prof.min_degree) + ",\"max_degree\":" +
                       std::to_string(prof.max_degree) + ",\"edge_connectivity\":" +
                       std::to_string(edge_connectivity(g)) +
                       ",\"vertex_connectivity\":" +
                       std::to_string(vertex_connectivity(g)) + ",\"min_cut\":{\"side\":" +
                       json_vertex_list(cut.side) + ",\"edges\":" + edges + "}";
    if (a.k >= 2) {
        json += ",\"k\":" + std::to_string(a.k);
        auto km = contains_k_minus(g, a.k);
        json += ",\"near_complete\":" + (km ? json_vertex_list(*km) : "null");
        auto we = has_k_edge_connected_subgraph(g, a.k);
        json += ",\"edge_member\":" + (we ? json_witness(*we) : "null");
        auto wv = has_k_connected_subgraph(
            g, a.k, resolve_budget(a.budget, kVertexSubgraphBudget));
        json += ",\"vertex_member\":" + (wv ? json_witness(*wv) : "null");
    }
    json += "}";
    std::cout << json << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph saturation toolkit"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a named graph");
    construct->add_option("--type", ca.type, "gkn | split | kminus | ktree")
        ->required();
    construct->add_option("--k", ca.k, "family level")->required();
    construct->add_option("--n", ca.n, "vertex count");
    construct->add_option("--seed", ca.seed, "ktree seed");
    construct->add_option("--out", ca.out, "output file (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check saturation of a graph");
    verify->add_option("--in", va.in, "edge list file, - for stdin")->required();
    verify->add_option("--family", va.family, "edge | vertex");
    verify->add_option("--k", va.k, "family level")->required();
    verify->add_option("--budget", va.budget, "vertex-family size budget");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exhaustive optimum at small n");
    search->add_option("--n", sa.n, "vertex count")->required();
    search->add_option("--k", sa.k, "family level")->required();
    search->add_option("--family", sa.family, "edge | vertex");
    search->add_option("--mode", sa.mode, "sat | ex");
    search->add_option("--workers", sa.workers, "parallel workers");
    search->add_option("--budget", sa.budget, "max n allowed");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "closed forms vs searched values");
    table->add_option("--k", ta.k, "family level")->required();
    table->add_option("--n-max", ta.n_max, "last row")->required();
    table->add_option("--workers", ta.workers, "parallel workers");
    table->add_option("--budget", ta.budget, "search size limit");

    SpectralArgs pa;
    auto* spectral = app.add_subcommand("spectral", "spectral radius and bounds");
    spectral->add_option("--in", pa.in, "edge list file, - for stdin")->required();
    spectral->add_option("--partition", pa.partition,
                         "file with one block per line");
    spectral->add_option("--k", pa.k, "compare against the level-k floor");
    spectral->add_option("--tol", pa.tol, "iteration tolerance");

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "connectivity report");
    analyze->add_option("--in", aa.in, "edge list file, - for stdin")->required();
    analyze->add_option("--k", aa.k, "run level-k member detectors");
    analyze->add_option("--budget", aa.budget, "vertex-family size budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(va);
        if (search->parsed()) return run_search(sa);
        if (table->parsed()) return run_table(ta);
        if (spectral->parsed()) return run_spectral(pa);
        if (analyze->parsed()) return run_analyze(aa);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
