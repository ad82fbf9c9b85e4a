#include <doctest.h>

#include "cisgraph/errors.hpp"
#include "cisgraph/named_graphs.hpp"
#include "cisgraph/operations.hpp"
#include "cisgraph/sets_oracle.hpp"
#include "oracle_helpers.hpp"

using namespace cisgraph;
using cisgraph::testing::as_sorted_lists;
using cisgraph::testing::subset_lattice_maximal_cliques;

TEST_CASE("maximal cliques on the standard small graphs") {
    auto lists = as_sorted_lists(maximal_cliques(cycle_graph(4)).sets);
    CHECK(lists == std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    CHECK(maximal_cliques(complete_graph(6)).size() == 1);
    CHECK(maximal_cliques(complete_graph(6)).sets[0].count() == 6);

    lists = as_sorted_lists(maximal_cliques(bull_graph()).sets);
    CHECK(lists == std::vector<std::vector<int>>{{0, 1}, {1, 2, 4}, {2, 3}});

    lists = as_sorted_lists(maximal_stable_sets(cycle_graph(4)).sets);
    CHECK(lists == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

    CHECK(maximal_stable_sets(complete_graph(5)).size() == 5);

    lists = as_sorted_lists(maximal_stable_sets(path_graph(4)).sets);
    CHECK(lists == std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("clique enumeration agrees with the subset lattice up to order 6") {
    for (int n = 1; n <= 6; ++n) {
        LabeledGraphs all(n);
        for (std::uint64_t code = 0; code < all.size(); ++code) {
            const Graph g = all.at(code);
            if (as_sorted_lists(maximal_cliques(g).sets) != subset_lattice_maximal_cliques(g)) {
                CAPTURE(n);
                CAPTURE(code);
                REQUIRE(false);
            }
        }
    }
    CHECK(true);
}

TEST_CASE("enumeration cap raises with a partial count") {
    // complement of 8 disjoint triangles: a complete 8-partite graph with 3^8
    // maximal cliques
    Graph g = complete_graph(3);
    for (int i = 1; i < 8; ++i) g = disjoint_union(g, complete_graph(3));
    CHECK_THROWS_AS(maximal_cliques(complement(g), 1000), CapExceeded);
    try {
        maximal_cliques(complement(g), 1000);
    } catch (const CapExceeded& e) {
        CHECK(e.partial_count() == 1000);
    }
}

TEST_CASE("alpha and omega") {
    CHECK(alpha(cycle_graph(5)) == 2);
    CHECK(omega(cycle_graph(5)) == 2);
    // {0,3,4} is stable in the bull: the two horn tips plus the apex
    CHECK(alpha(bull_graph()) == 3);
    CHECK(omega(bull_graph()) == 3);
    CHECK(alpha(complete_bipartite(2, 5)) == 5);
    CHECK(omega(complete_bipartite(2, 5)) == 2);
    CHECK(alpha(Graph(1)) == 1);
    CHECK(omega(Graph(1)) == 1);
}

TEST_CASE("strong and simplicial cliques") {
    const Graph c4 = cycle_graph(4);
    CHECK(is_strong_clique(c4, VertexSet::of(4, {0, 1})));
    CHECK_THROWS_AS(is_strong_clique(c4, VertexSet::of(4, {0, 2})), std::invalid_argument);

    const Graph p4 = path_graph(4);
    CHECK_FALSE(is_strong_clique(p4, VertexSet::of(4, {1, 2}))); // misses {0,3}

    const Graph k5 = complete_graph(5);
    CHECK(is_strong_clique(k5, VertexSet::full(5)));

    CHECK(is_simplicial_clique(bull_graph(), VertexSet::of(5, {0, 1}))); // N[0]
    CHECK_FALSE(is_simplicial_clique(c4, VertexSet::of(4, {0, 1})));
    CHECK_FALSE(is_simplicial_clique(p4, VertexSet::of(4, {0, 2}))); // not a clique

    // every simplicial clique is strong
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphs all(n);
        for (std::uint64_t code = 0; code < all.size(); ++code) {
            const Graph g = all.at(code);
            for (const auto& c : maximal_cliques(g).sets)
                if (is_simplicial_clique(g, c)) CHECK(is_strong_clique(g, c));
        }
    }
    // strong cliques are maximal: a strictly contained clique cannot be strong
    CHECK_FALSE(is_strong_clique(complete_graph(3), VertexSet::of(3, {0, 1})));
}

TEST_CASE("cis brute force on the golden graphs") {
    CHECK(is_cis_bruteforce(bull_graph()).cis);
    CHECK(is_cis_bruteforce(Graph(1)).cis);

    const auto p4 = is_cis_bruteforce(path_graph(4));
    REQUIRE_FALSE(p4.cis);
    REQUIRE(p4.witness.has_value());
    CHECK(p4.witness->first.to_vector() == std::vector<int>{1, 2});
    CHECK(p4.witness->second.to_vector() == std::vector<int>{0, 3});
    CHECK(is_clique(path_graph(4), p4.witness->first));
    CHECK(is_stable_set(path_graph(4), p4.witness->second));

    CHECK_FALSE(is_cis_bruteforce(cycle_graph(5)).cis);
    CHECK(is_cis_bruteforce(cycle_graph(4)).cis);
    CHECK_FALSE(is_cis_bruteforce(gem_graph()).cis);
}

TEST_CASE("unsettled comb search") {
    // P_4 is itself a 2-comb with nobody around to settle it
    const auto p4 = find_unsettled(path_graph(4), 2, CombKind::comb);
    REQUIRE(p4.has_value());
    CHECK(p4->kind == CombKind::comb);
    CHECK(p4->clique == std::vector<int>{1, 2});
    CHECK(p4->stem == std::vector<int>{0, 3});

    // the bull's only 2-comb is settled by vertex 4
    CHECK_FALSE(find_unsettled(bull_graph(), 2, CombKind::comb).has_value());
    CHECK_FALSE(find_unsettled(bull_graph(), 3, CombKind::comb).has_value());
    CHECK_FALSE(find_unsettled(bull_graph(), 3, CombKind::anticomb).has_value());

    // the gem fails the screen at k <= 3
    CHECK(find_unsettled(gem_graph(), 3, CombKind::comb).has_value());

    // combs themselves: every smaller comb inside comb(3) is settled by the
    // spare clique vertex, so the defining split partition is the witness
    const auto comb3 = find_unsettled(comb_graph(3), 3, CombKind::comb);
    REQUIRE(comb3.has_value());
    CHECK(comb3->clique == std::vector<int>{0, 1, 2});
    CHECK(comb3->stem == std::vector<int>{3, 4, 5});

    const auto anti = find_unsettled(anticomb_graph(3), 3, CombKind::anticomb);
    REQUIRE(anti.has_value());
    CHECK(anti->kind == CombKind::anticomb);
    // the witness really is an anticomb: paired entries non-adjacent, all
    // other clique-stem pairs adjacent
    const Graph ag = anticomb_graph(3);
    for (std::size_t i = 0; i < anti->clique.size(); ++i)
        for (std::size_t j = 0; j < anti->stem.size(); ++j)
            CHECK(ag.adjacent(anti->clique[i], anti->stem[j]) == (i != j));

    CHECK_THROWS_AS(find_unsettled(path_graph(4), 1, CombKind::comb), std::invalid_argument);
}

TEST_CASE("cis graphs pass the comb screen on every labeled graph up to order 5") {
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphs all(n);
        for (std::uint64_t code = 0; code < all.size(); ++code) {
            const Graph g = all.at(code);
            if (!is_cis_bruteforce(g).cis) continue;
            CHECK_FALSE(find_unsettled(g, 3, CombKind::comb).has_value());
            CHECK_FALSE(find_unsettled(g, 3, CombKind::anticomb).has_value());
        }
    }
}

TEST_CASE("cis is preserved by complement and twin reduction on small scans") {
    for (int n = 1; n <= 5; ++n) {
        LabeledGraphs all(n);
        for (std::uint64_t code = 0; code < all.size(); ++code) {
            const Graph g = all.at(code);
            const bool cis = is_cis_bruteforce(g).cis;
            CHECK(cis == is_cis_bruteforce(complement(g)).cis);
            bool all_parts = true;
            for (const auto& comp : components(g)) {
                const Graph local = induced_subgraph(g, comp);
                if (!is_cis_bruteforce(true_twin_reduction(local).reduced).cis) all_parts = false;
            }
            CHECK(cis == all_parts);
        }
    }
}
