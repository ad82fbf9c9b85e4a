#include <doctest.h>

#include "cisgraph/graph_io.hpp"
#include "cisgraph/named_graphs.hpp"
#include "cisgraph/operations.hpp"
#include "cisgraph/random.hpp"

using namespace cisgraph;

TEST_CASE("graph6 decodes the hand-built encodings") {
    CHECK(parse_graph("@", GraphFormat::graph6) == Graph(1));
    CHECK(parse_graph("A_", GraphFormat::graph6) == complete_graph(2));
    CHECK(parse_graph("Bw", GraphFormat::graph6) == complete_graph(3));
    CHECK(parse_graph("A?", GraphFormat::graph6) == Graph(2));
    CHECK(parse_graph(">>graph6<<A_", GraphFormat::graph6) == complete_graph(2));
    CHECK(parse_graph("A_\n", GraphFormat::graph6) == complete_graph(2));
}

TEST_CASE("graph6 encodes canonically") {
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
}

TEST_CASE("graph6 round trip on every labeled graph up to order 7") {
    for (int n = 1; n <= 7; ++n) {
        LabeledGraphs all(n);
        for (std::uint64_t code = 0; code < all.size(); ++code) {
            const Graph g = all.at(code);
            if (parse_graph(to_graph6(g), GraphFormat::graph6) != g) {
                CAPTURE(n);
                CAPTURE(code);
                REQUIRE(false);
            }
        }
    }
    CHECK(true);
}

TEST_CASE("graph6 round trip for the wide-header sizes") {
    Rng rng(7);
    Graph g = random_graph(70, 0.3, rng);
    CHECK(parse_graph(to_graph6(g), GraphFormat::graph6) == g);
    CHECK(to_graph6(g)[0] == '~');
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph("", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("B", GraphFormat::graph6), ParseError);   // truncated
    CHECK_THROWS_AS(parse_graph("Bww", GraphFormat::graph6), ParseError); // trailing
    CHECK_THROWS_AS(parse_graph("B\x1f", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("?", GraphFormat::graph6), ParseError); // order 0

    try {
        parse_graph("Bw\x20", GraphFormat::graph6);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    // nonzero padding: K_2 needs one edge bit, the rest must stay clear
    try {
        parse_graph("A" + std::string(1, char(63 + 63)), GraphFormat::graph6);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("edge list format") {
    CHECK(parse_graph("4\n0 1\n1 2\n2 3\n", GraphFormat::edgelist) == path_graph(4));
    CHECK(parse_graph("1\n", GraphFormat::edgelist) == Graph(1));
    CHECK(parse_graph("3\n0 1\n0 1\n", GraphFormat::edgelist).edge_count() == 1);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 3\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n1 1\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(parse_graph("0\n", GraphFormat::edgelist), ParseError);

    const Graph g = bull_graph();
    CHECK(parse_graph(to_edgelist(g), GraphFormat::edgelist) == g);
}

TEST_CASE("graph6 corpus parsing") {
    const auto graphs = parse_graph6_corpus("@\nA_\n\nBw\n");
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == Graph(1));
    CHECK(graphs[2] == complete_graph(3));
    try {
        parse_graph6_corpus("@\nB\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() >= 2); // offset points into the second line
    }
}
