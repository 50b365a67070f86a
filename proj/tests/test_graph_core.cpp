#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/rng.hpp"

using namespace satgraph;

TEST_CASE("vertex set helpers") {
    CHECK(vbit(0) == 1u);
    CHECK(vbit(5) == 32u);
    CHECK(full_set(0) == 0u);
    CHECK(full_set(3) == 7u);
    CHECK(full_set(64) == ~0ull);
    CHECK(lowest_vertex(0b1100) == 2);
    CHECK(set_size(0b1011) == 3);
    CHECK(set_vertices(0b1010) == std::vector<int>{1, 3});
}

TEST_CASE("graph construction and edge bookkeeping") {
    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // idempotent
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 1);
    CHECK(g.neighbors(3) == vbit(2));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(g.has_edge(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK(validate_graph(g));

    Graph h(4);
    h.add_edge(2, 3);
    h.add_edge(0, 1);
    CHECK(g == h);
    h.add_edge(1, 2);
    CHECK_FALSE(g == h);
}

TEST_CASE("complement edges in ascending order") {
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(complement_edges(p3) == std::vector<std::pair<int, int>>{{0, 2}});

    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    CHECK(complement_edges(k3).empty());

    Graph e3(3);
    CHECK(complement_edges(e3) ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("induced subgraph relabels in ascending label order") {
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(2, 4);
    g.add_edge(1, 3);
    auto sub = induced_subgraph(g, vbit(0) | vbit(2) | vbit(4));
    CHECK(sub.labels == std::vector<int>{0, 2, 4});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.graph.has_edge(0, 1));
    CHECK(sub.graph.has_edge(1, 2));
    CHECK_FALSE(sub.graph.has_edge(0, 2));
    CHECK_THROWS_AS(induced_subgraph(g, vbit(5)), std::invalid_argument);
}

TEST_CASE("degree profile sorts ascending") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    auto p = degree_profile(g);
    CHECK(p.min_degree == 1);
    CHECK(p.max_degree == 3);
    CHECK(p.degrees == std::vector<int>{1, 1, 1, 3});
    CHECK_THROWS_AS(degree_profile(Graph(0)), std::invalid_argument);
}

TEST_CASE("connectivity predicate") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK_FALSE(is_connected(g));
    g.add_edge(2, 3);
    CHECK(is_connected(g));
    CHECK(is_connected(Graph(1)));
    Graph two(2);
    CHECK_FALSE(is_connected(two));
}

TEST_CASE("edge list round trip") {
    Graph g(5);
    g.add_edge(0, 4);
    g.add_edge(1, 2);
    g.add_edge(0, 1);
    std::string text = write_edge_list(g);
    CHECK(text == "5 3\n0 1\n0 4\n1 2\n");
    Graph back = parse_edge_list(text);
    CHECK(back == g);
}

TEST_CASE("edge list reader tolerates order and duplicates") {
    Graph g = parse_edge_list("4 3\n2 1\n1 2\n0 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);  // duplicate pair collapses
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 3));
}

TEST_CASE("edge list reader rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("junk\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("70 0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("3 9\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), std::runtime_error);
}

TEST_CASE("splitmix64 matches the reference sequence") {
    SplitMix64 a(0);
    CHECK(a.next() == 16294208416658607535ull);
    CHECK(a.next() == 7960286522194355700ull);
    CHECK(a.next() == 487617019471545679ull);
    SplitMix64 b(1);
    CHECK(b.next() == 10451216379200822465ull);
    CHECK(b.next() == 13757245211066428519ull);
    SplitMix64 c(42);
    std::vector<std::uint64_t> draws;
    for (int i = 0; i < 5; ++i) draws.push_back(c.next_below(100));
    CHECK(draws == std::vector<std::uint64_t>{13, 91, 58, 64, 50});
}

TEST_CASE("random graph helpers are deterministic") {
    Graph a = oracles::random_graph(8, 7, 40);
    Graph b = oracles::random_graph(8, 7, 40);
    CHECK(a == b);
    Graph t = oracles::random_tree(9, 3);
    CHECK(t.edge_count() == 8);
    CHECK(is_connected(t));
}
