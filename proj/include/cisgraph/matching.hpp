#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cisgraph/errors.hpp"
#include "cisgraph/graph.hpp"
#include "cisgraph/sets_oracle.hpp"

namespace cisgraph {

/// A set of pairwise disjoint edges, stored as (u,v) pairs with u < v in
/// lexicographic order.
struct Matching {
    std::vector<std::pair<int, int>> edges;

    bool saturates(int v) const {
        for (auto [a, b] : edges)
            if (a == v || b == v) return true;
        return false;
    }
    std::size_t size() const { return edges.size(); }
};

bool is_matching(const Graph& g, const Matching& m);
bool is_maximal_matching(const Graph& g, const Matching& m);

namespace detail {

// Enumerates the inclusion-maximal matchings exactly once each. Branches on
// the lowest free vertex v that still has a free neighbor: either v is
// matched to one of those neighbors, or v stays unmatched for good (the
// "excluded" state). Every maximal matching decides v one of these ways, and
// different branches fix different partners for v, so the leaves are exactly
// the maximal matchings, without duplicates. Leaves where an excluded vertex
// kept a free neighbor are discarded (those matchings are extendable).
template <class F>
bool enumerate_maximal_matchings(const Graph& g, std::vector<int>& partner, VertexSet& matched,
                                 VertexSet& excluded, F&& emit) {
    const int n = g.order();
    int v = -1;
    VertexSet free_candidates(n);
    for (int u = 0; u < n; ++u) {
        if (partner[u] != -1 || excluded.contains(u)) continue;
        VertexSet cand = (g.neighbors(u) - excluded) - matched;
        if (!cand.empty()) {
            v = u;
            free_candidates = cand;
            break;
        }
    }
    if (v == -1) {
        // No extendable free vertex remains; reject if some edge ended up
        // with both endpoints unmatched.
        for (auto [a, b] : g.edges())
            if (partner[a] == -1 && partner[b] == -1) return true;
        Matching m;
        for (int u = 0; u < n; ++u)
            if (partner[u] > u) m.edges.emplace_back(u, partner[u]);
        return emit(m);
    }
    bool stop = false;
    free_candidates.for_each([&](int u) {
        if (stop) return;
        partner[v] = u;
        partner[u] = v;
        matched.add(v);
        matched.add(u);
        stop = !enumerate_maximal_matchings(g, partner, matched, excluded, emit);
        partner[v] = -1;
        partner[u] = -1;
        matched.remove(v);
        matched.remove(u);
    });
    if (stop) return false;
    if (!(g.neighbors(v) & excluded).empty()) return true; // an uncoverable edge would remain
    excluded.add(v);
    bool keep = enumerate_maximal_matchings(g, partner, matched, excluded, emit);
    excluded.remove(v);
    return keep;
}

} // namespace detail

/// Streams every maximal matching once, in a fixed deterministic order.
/// emit returns false to stop early; the function returns false iff stopped.
template <class F>
bool for_each_maximal_matching(const Graph& g, F&& emit) {
    std::vector<int> partner(g.order(), -1);
    VertexSet matched(g.order());
    VertexSet excluded(g.order());
    return detail::enumerate_maximal_matchings(g, partner, matched, excluded, emit);
}

std::vector<Matching> maximal_matchings(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// Matching number: maximum matching size (a maximum matching is maximal,
/// so scanning the maximal ones suffices).
int nu(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// Vertices of degree at least two.
VertexSet internal_vertices(const Graph& g);

/// True iff m saturates every internal vertex. m must be a matching of g.
bool is_perfect_internal(const Graph& g, const Matching& m);

/// True iff every unsaturated vertex has its whole neighborhood inside one
/// edge of m. m must be a maximal matching of g.
bool is_absorbing(const Graph& g, const Matching& m);

enum class RimVerdict { K2n, Knn, leaf_extension, not_rim };

/// Structural form of a (randomly internally) matchable graph. The witness
/// reconstructs the graph exactly: K2n means the complete graph on 2n
/// labeled vertices; Knn carries the bipartition; leaf_extension carries the
/// core vertices and the host -> leaves assignment.
struct RimForm {
    RimVerdict verdict = RimVerdict::not_rim;
    int n = 0;
    std::vector<int> side_a, side_b;
    std::vector<int> core;
    std::vector<std::pair<int, std::vector<int>>> leaves;
};

/// Connected graphs in which every maximal matching is perfect: exactly the
/// complete graphs of even order and the balanced complete bipartite graphs.
/// Tie-break K2n before Knn. Disconnected input is an error.
RimForm recognize_randomly_matchable(const Graph& g);

/// Connected graphs in which every maximal matching saturates all internal
/// vertices: the randomly matchable forms plus the leaf extensions. A single
/// vertex is vacuously such a graph and is reported as a degenerate
/// leaf_extension of itself with no leaves.
RimForm recognize_rim(const Graph& g);

bool is_randomly_matchable_bruteforce(const Graph& g);
bool is_rim_bruteforce(const Graph& g);

} // namespace cisgraph
