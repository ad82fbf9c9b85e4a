#include <doctest.h>

#include "cisgraph/line_graphs.hpp"
#include "cisgraph/matching.hpp"
#include "cisgraph/named_graphs.hpp"
#include "cisgraph/operations.hpp"
#include "cisgraph/random.hpp"
#include "cisgraph/sets_oracle.hpp"

using namespace cisgraph;

TEST_CASE("line graphs of the standard small graphs") {
    CHECK(line_graph(path_graph(4)).line == path_graph(3));
    CHECK(line_graph(claw_graph()).line == complete_graph(3));
    // a 4-cycle in the edge-list labeling 1-0-2-3
    CHECK(line_graph(complete_bipartite(2, 2)).line ==
          Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    CHECK_THROWS_AS(line_graph(Graph(3)), std::invalid_argument);

    const auto res = line_graph(bull_graph());
    CHECK(res.line.order() == 5);
    CHECK(verify_root_certificate(res.line, res.cert));
}

TEST_CASE("weighted line graphs") {
    // unit weights reproduce the plain line graph
    const Graph h = bull_graph();
    CHECK(line_graph_weighted(with_unit_weights(h)) == line_graph(h).line);

    // one edge of multiplicity 3 collapses to a triangle
    WeightedGraph single{complete_graph(2), {3}};
    CHECK(line_graph_weighted(single) == complete_graph(3));

    // P_3 with weights (2,1): all three copies meet at the middle vertex
    WeightedGraph p3{path_graph(3), {2, 1}};
    CHECK(line_graph_weighted(p3) == complete_graph(3));

    WeightedGraph bad{path_graph(3), {0, 1}};
    CHECK_THROWS_AS(line_graph_weighted(bad), std::invalid_argument);
}

TEST_CASE("line root reconstruction on the ambiguous and classic cases") {
    // K_3 has two roots; the triangle-free one is preferred
    const auto k3 = line_root(complete_graph(3));
    REQUIRE(k3.has_value());
    CHECK(verify_root_certificate(complete_graph(3), *k3));
    CHECK_FALSE(find_triangle(k3->root).has_value());
    CHECK(k3->root.order() == 4); // the star K_{1,3}

    CHECK_FALSE(line_root(claw_graph()).has_value());

    const auto c4 = line_root(cycle_graph(4));
    REQUIRE(c4.has_value());
    CHECK(verify_root_certificate(cycle_graph(4), *c4));
    auto parts = complete_bipartite_parts(c4->root);
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() == 2);
    CHECK(parts->second.size() == 2);

    // K_1 = L(K_2)
    const auto k1 = line_root(Graph(1));
    REQUIRE(k1.has_value());
    CHECK(verify_root_certificate(Graph(1), *k1));

    CHECK_THROWS_AS(line_root(Graph(2)), std::invalid_argument); // disconnected

    // W_4 = L(K_4 minus an edge); the hub is the edge joining the two
    // degree-3 vertices
    const auto w4 = line_root(wheel4_graph());
    REQUIRE(w4.has_value());
    CHECK(verify_root_certificate(wheel4_graph(), *w4));

    // W_5's hub needs three cliques to cover its spokes, so no root exists
    Graph w5(6);
    for (auto [u, v] : cycle_graph(5).edges()) w5.add_edge(u, v);
    for (int v = 0; v < 5; ++v) w5.add_edge(v, 5);
    CHECK_FALSE(line_root(w5).has_value());

    CHECK_FALSE(line_root(complete_bipartite(1, 4)).has_value());
}

TEST_CASE("line root inverts line_graph on seeded connected roots") {
    Rng rng(101);
    int checked = 0;
    while (checked < 400) {
        const int n = rng.range(4, 8);
        const Graph h = random_graph(n, 0.4, rng);
        if (!is_connected(h) || h.edge_count() < 4 || h.edge_count() > 12) continue;
        const Graph g = line_graph(h).line;
        const auto cert = line_root(g);
        REQUIRE(cert.has_value());
        CHECK(verify_root_certificate(g, *cert));
        ++checked;
    }
}

TEST_CASE("certificate verification rejects corrupt certificates") {
    const auto res = line_graph(path_graph(4));
    RootCertificate bad = res.cert;
    bad.edge_of_vertex[0] = bad.edge_of_vertex[1]; // duplicate edge
    CHECK_FALSE(verify_root_certificate(res.line, bad));

    RootCertificate wrong = res.cert;
    wrong.edge_of_vertex = {{0, 1}, {2, 3}, {1, 2}}; // breaks the adjacency rule
    CHECK_FALSE(verify_root_certificate(res.line, wrong));

    CHECK_FALSE(verify_root_certificate(complete_graph(3), res.cert));
}

TEST_CASE("induced pattern search") {
    CHECK(contains_induced(claw_graph(), Pattern::claw).has_value());
    CHECK(contains_induced(claw_graph(), Pattern::claw)->at(0) == 0);
    CHECK_FALSE(contains_induced(gem_graph(), Pattern::claw).has_value());
    CHECK_FALSE(contains_induced(complete_graph(5), Pattern::claw).has_value());

    CHECK(contains_induced(gem_graph(), Pattern::gem).has_value());
    CHECK_FALSE(contains_induced(wheel4_graph(), Pattern::gem).has_value());
    CHECK_FALSE(contains_induced(path_graph(5), Pattern::gem).has_value());

    CHECK(contains_induced(wheel4_graph(), Pattern::w4).has_value());
    CHECK_FALSE(contains_induced(gem_graph(), Pattern::w4).has_value());
    CHECK_FALSE(contains_induced(complete_graph(6), Pattern::w4).has_value());

    // embeddings come back role-ordered and genuinely induced
    const Graph big = disjoint_union(complete_graph(2), gem_graph());
    const auto emb = contains_induced(big, Pattern::gem);
    REQUIRE(emb.has_value());
    const auto& e = *emb;
    CHECK(big.adjacent(e[0], e[1]));
    CHECK(big.adjacent(e[1], e[2]));
    CHECK(big.adjacent(e[2], e[3]));
    CHECK_FALSE(big.adjacent(e[0], e[2]));
    CHECK_FALSE(big.adjacent(e[0], e[3]));
    CHECK_FALSE(big.adjacent(e[1], e[3]));
    for (int i = 0; i < 4; ++i) CHECK(big.adjacent(e[4], e[i]));
}

TEST_CASE("bull subgraph search") {
    CHECK(contains_bull_subgraph(bull_graph()).has_value());
    CHECK(contains_bull_subgraph(complete_graph(5)).has_value());
    CHECK_FALSE(contains_bull_subgraph(complete_graph(4)).has_value());
    CHECK_FALSE(contains_bull_subgraph(complete_bipartite(3, 3)).has_value());
    CHECK_FALSE(contains_bull_subgraph(cycle_graph(6)).has_value());

    const auto w = contains_bull_subgraph(bull_graph());
    REQUIRE(w.has_value());
    const auto& v = *w;
    CHECK(bull_graph().adjacent(v[0], v[2]));
    CHECK(bull_graph().adjacent(v[1], v[3]));
    CHECK(bull_graph().adjacent(v[2], v[3]));
    CHECK(bull_graph().adjacent(v[2], v[4]));
    CHECK(bull_graph().adjacent(v[3], v[4]));
}

TEST_CASE("dominoes") {
    CHECK(is_domino(cycle_graph(4)));
    CHECK(is_domino(complete_graph(7)));
    CHECK_FALSE(is_domino(claw_graph()));

    // every vertex in at most two maximal cliques == {claw, gem, W4}-free,
    // exhaustively over the connected graphs of order <= 6
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphs all(n);
        for (std::uint64_t code = 0; code < all.size(); ++code) {
            const Graph g = all.at(code);
            if (!is_connected(g)) continue;
            const bool free_of_all = !contains_induced(g, Pattern::claw) &&
                                     !contains_induced(g, Pattern::gem) &&
                                     !contains_induced(g, Pattern::w4);
            if (is_domino(g) != free_of_all) {
                CAPTURE(n);
                CAPTURE(code);
                REQUIRE(false);
            }
        }
    }

    // dominoes are the line graphs of triangle-free multigraphs
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const int n = rng.range(2, 6);
        Graph h = random_graph(n, 0.5, rng);
        if (find_triangle(h) || h.edge_count() == 0) continue;
        std::vector<int> w;
        for (std::size_t i = 0; i < h.edge_count(); ++i) w.push_back(rng.range(1, 4));
        CHECK(is_domino(line_graph_weighted({h, w})));
    }
}

TEST_CASE("cis test on the root side") {
    CHECK(is_cis_line(complete_bipartite(2, 2)));
    CHECK_FALSE(is_cis_line(path_graph(5)));
    CHECK(is_cis_line(path_graph(4)));
    CHECK_FALSE(is_cis_line(bull_graph())); // bull subgraph
    CHECK_THROWS_AS(is_cis_line(disjoint_union(path_graph(2), Graph(1))),
                    std::invalid_argument);

    // matches the brute-force verdict on the line graph
    CHECK(is_cis_line(complete_bipartite(2, 2)) ==
          is_cis_bruteforce(line_graph(complete_bipartite(2, 2)).line).cis);
    CHECK(is_cis_line(path_graph(5)) == is_cis_bruteforce(line_graph(path_graph(5)).line).cis);
}
