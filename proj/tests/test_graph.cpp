#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "nbcolor/errors.hpp"
#include "nbcolor/graph.hpp"

using namespace nbcolor;

TEST_SUITE("graph") {

TEST_CASE("edge list parsing and canonical serialization round-trip") {
    const std::string text = "# comment\nn 5\n0 1\n\n1 2\n2 0\n";
    Graph g = parse_edge_list(text);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 2));
    Graph again = parse_edge_list(serialize_edge_list(g));
    CHECK(serialize_edge_list(again) == serialize_edge_list(g));
}

TEST_CASE("vertex count defaults to one plus max id") {
    Graph g = parse_edge_list("3 7\n0 3\n");
    CHECK(g.vertex_count() == 8);
}

TEST_CASE("malformed input raises parse_error with diagnostics") {
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("1\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("2 2\n"), parse_error); // self-loop
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), parse_error); // id beyond header
}

TEST_CASE("duplicate edges collapse") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    g.check_invariants();
}

TEST_CASE("two_core peels trees and is idempotent") {
    // triangle with a pendant path
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    auto res = two_core(g);
    CHECK(res.core.vertex_count() == 3);
    CHECK(res.core.edge_count() == 3);
    CHECK(res.old_to_new[4] == -1);
    CHECK(res.new_to_old.size() == 3);
    auto twice = two_core(res.core);
    CHECK(serialize_edge_list(twice.core) == serialize_edge_list(res.core));

    CHECK(two_core(corpus::path_graph(6)).core.vertex_count() == 0);
}

TEST_CASE("girth on the named corpus") {
    CHECK(*girth(corpus::complete_graph(4)) == 3);
    CHECK(*girth(corpus::cycle_graph(5)) == 5);
    CHECK(*girth(corpus::petersen()) == 5);
    CHECK(*girth(corpus::dodecahedron()) == 5);
    CHECK(*girth(corpus::mcgee()) == 7);
    CHECK(!girth(corpus::path_graph(4)).has_value());
}

TEST_CASE("bfs_ball distances and unique parents") {
    Graph g = corpus::petersen();
    auto ball = bfs_ball(g, 0, 2);
    CHECK(ball.dist[0] == 0);
    int at1 = 0, at2 = 0;
    for (int v = 1; v < 10; ++v) {
        if (ball.dist[v] == 1) ++at1;
        if (ball.dist[v] == 2) ++at2;
        if (ball.dist[v] >= 1) {
            int p = ball.parent[v];
            CHECK(g.has_edge(p, v));
            CHECK(ball.dist[p] == ball.dist[v] - 1);
        }
    }
    CHECK(at1 == 3);
    CHECK(at2 == 6); // girth 5: radius-2 ball is a tree covering all 10 vertices
}

TEST_CASE("bipartition and components") {
    CHECK(bipartition(corpus::cycle_graph(6)).has_value());
    CHECK(!bipartition(corpus::cycle_graph(5)).has_value());
    auto coloring = *bipartition(corpus::cycle_graph(8));
    for (auto [u, v] : corpus::cycle_graph(8).edges()) CHECK(coloring[u] != coloring[v]);

    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(connected_components(two).size() == 2);
    CHECK(!is_connected(two));
    CHECK(is_connected(corpus::petersen()));
}

TEST_CASE("induced subgraph relabels consistently") {
    Graph g = corpus::petersen();
    std::vector<int> keep = {0, 1, 2, 5, 6};
    std::vector<int> old_to_new;
    Graph sub = induced_subgraph(g, keep, &old_to_new);
    CHECK(sub.vertex_count() == 5);
    for (auto [u, v] : sub.edges()) {
        int gu = keep[u], gv = keep[v];
        CHECK(g.has_edge(gu, gv));
    }
    CHECK(old_to_new[3] == -1);
    CHECK(old_to_new[0] == 0);
}

TEST_CASE("er sampling is seed-deterministic") {
    Graph a = sample_er(200, 5.0, 42);
    Graph b = sample_er(200, 5.0, 42);
    Graph c = sample_er(200, 5.0, 43);
    CHECK(serialize_edge_list(a) == serialize_edge_list(b));
    CHECK(serialize_edge_list(a) != serialize_edge_list(c));
    // mean degree within loose bounds around d
    CHECK(a.average_degree() > 3.0);
    CHECK(a.average_degree() < 7.0);
    a.check_invariants();
}

TEST_CASE("greedy 3-coloring of 2-degenerate graphs") {
    // C_5 with pendant trees has an empty 3-core
    Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                    {0, 5}, {5, 6}, {5, 7}});
    auto colors = greedy_color_2degenerate(g);
    for (auto [u, v] : g.edges()) CHECK(colors[u] != colors[v]);
    for (int c : colors) {
        CHECK(c >= 1);
        CHECK(c <= 3);
    }
    CHECK_THROWS_AS(greedy_color_2degenerate(corpus::complete_graph(4)), eligibility_error);
}

TEST_CASE("connected graph enumeration matches known class counts") {
    CHECK(corpus::connected_graphs(2).size() == 1);
    CHECK(corpus::connected_graphs(3).size() == 2);
    CHECK(corpus::connected_graphs(4).size() == 6);
    CHECK(corpus::connected_graphs(5).size() == 21);
    CHECK(corpus::connected_graphs(6).size() == 112);
}

TEST_CASE("exact test oracles behave on knowns") {
    CHECK(corpus::chromatic_number_exact(corpus::petersen()) == 3);
    CHECK(corpus::chromatic_number_exact(corpus::complete_graph(5)) == 5);
    CHECK(corpus::chromatic_number_exact(corpus::cycle_graph(7)) == 3);
    CHECK(corpus::max_cut_exact(corpus::petersen()) == 12);
    CHECK(corpus::max_cut_exact(corpus::cycle_graph(6)) == 6);
    CHECK(corpus::max_cut_exact(corpus::cycle_graph(5)) == 4);
}

} // TEST_SUITE
