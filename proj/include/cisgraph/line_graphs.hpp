#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cisgraph/graph.hpp"
#include "cisgraph/sets_oracle.hpp"

namespace cisgraph {

/// A graph with a positive integer multiplicity per edge, i.e. a loopless
/// multigraph. weight is parallel to base.edges() (lexicographic order).
struct WeightedGraph {
    Graph base;
    std::vector<int> weight;
};

WeightedGraph with_unit_weights(const Graph& base);

/// Witness that g is the line graph of `root`: edge_of_vertex[v] is the root
/// edge corresponding to vertex v, and two vertices are adjacent in g exactly
/// when their root edges share an endpoint. Checkable without any
/// isomorphism search.
struct RootCertificate {
    Graph root;
    std::vector<std::pair<int, int>> edge_of_vertex;
};

bool verify_root_certificate(const Graph& g, const RootCertificate& cert);

struct LineGraphResult {
    Graph line;
    RootCertificate cert;
};

/// Line graph of h (vertices = edges of h in lexicographic order), with its
/// defining certificate. h must have at least one edge.
LineGraphResult line_graph(const Graph& h);

/// Line graph of the multigraph (h, w): each edge expands to a clique of
/// size w(e) substituted into the plain line graph.
Graph line_graph_weighted(const WeightedGraph& hw);

/// Reconstructs a simple root graph for connected g, or nullopt when g is
/// not the line graph of any simple graph. Prefers a triangle-free root when
/// both exist (only possible for small ambiguous cases such as K_3).
std::optional<RootCertificate> line_root(const Graph& g);

enum class Pattern { claw, gem, w4 };

/// First induced embedding of the pattern, in deterministic order. The
/// returned vertices are role-ordered: claw = center then leaves; gem / w4 =
/// the path / cycle then the universal vertex.
std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern pattern);

/// Bull as a (not necessarily induced) subgraph: vertices ordered as the two
/// horn tips, the two triangle vertices they attach to, and the apex.
std::optional<std::vector<int>> contains_bull_subgraph(const Graph& g);

/// True iff every vertex lies in at most two maximal cliques.
bool is_domino(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// CIS test for the line graph of h, evaluated on the root side: h must have
/// no bull subgraph and every maximal matching of h must be absorbing.
/// h must have no isolated vertices.
bool is_cis_line(const Graph& h, std::size_t cap = kDefaultEnumerationCap);

} // namespace cisgraph
