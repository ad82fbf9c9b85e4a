#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cisgraph/vertex_set.hpp"

namespace cisgraph {

/// Finite simple undirected graph on vertex ids 0..n-1, n >= 1.
/// Adjacency is one bitset row per vertex. Graphs are built once and then
/// treated as immutable; every algorithm in this library takes const
/// references and is safe to run concurrently on shared graphs.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return m_; }

    /// Adds {u,v}; u != v required, duplicate insertions are ignored.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[static_cast<std::size_t>(v)];
        s.add(v);
        return s;
    }

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    int min_degree() const;

    /// Edges as (u,v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 1;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
};

} // namespace cisgraph
