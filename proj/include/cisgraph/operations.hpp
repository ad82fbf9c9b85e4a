#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cisgraph/graph.hpp"

namespace cisgraph {

Graph complement(const Graph& g);

/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of the complement, as vertex sets of g.
std::vector<VertexSet> co_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_co_connected(const Graph& g);

/// Vertices of the result are the members of s in ascending order,
/// relabeled 0..|s|-1. Empty s is an error (graphs here are non-null).
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Replaces vertex v by a copy of parts[v]; copies of adjacent vertices are
/// fully joined. Copies occupy consecutive id blocks in vertex order.
Graph substitute(const Graph& g, const std::vector<Graph>& parts);

/// Attaches sizes[v] >= 1 pendant leaves to each vertex; leaf ids follow the
/// original ids, grouped by host in vertex order.
Graph leaf_extension(const Graph& g, const std::vector<int>& sizes);

/// leaf_extension with exactly one leaf per vertex; leaf of v gets id n + v.
Graph corona(const Graph& g);

struct TwinReduction {
    Graph reduced;
    std::vector<int> class_of; // original vertex -> reduced vertex (class id)
};

/// Contracts every class of mutually true twins (equal closed neighborhoods)
/// to one vertex. Classes are numbered by their smallest member. Idempotent.
TwinReduction true_twin_reduction(const Graph& g);

std::optional<std::array<int, 3>> find_triangle(const Graph& g);

/// The bipartition of a connected complete bipartite graph (vertex 0 on the
/// first side), or nullopt when g is not one.
std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_parts(
    const Graph& g);

/// Number of labeled graphs on n vertices: 2^C(n,2). Requires n <= 11 so the
/// code fits in 64 bits.
std::uint64_t labeled_graph_count(int n);

/// Decodes a labeled graph from the bits of `code`, in the same column-major
/// upper-triangle order graph6 uses.
Graph graph_from_code(int n, std::uint64_t code);
std::uint64_t code_from_graph(const Graph& g); // g.order() <= 11

/// Exhaustive stream over all labeled graphs on n vertices. The code range
/// [0, size()) can be split across workers; at(code) is pure.
class LabeledGraphs {
public:
    /// n above the limit (default 7) is refused: enumerate from a corpus file
    /// instead of exhaustively.
    explicit LabeledGraphs(int n, int limit = 7);

    std::uint64_t size() const { return count_; }
    Graph at(std::uint64_t code) const { return graph_from_code(n_, code); }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t code = 0; code < count_; ++code) f(at(code));
    }

private:
    int n_;
    std::uint64_t count_;
};

} // namespace cisgraph
