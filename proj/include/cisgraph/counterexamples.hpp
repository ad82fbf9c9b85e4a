#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cisgraph/graph.hpp"
#include "cisgraph/random.hpp"
#include "cisgraph/sets_oracle.hpp"

namespace cisgraph {

/// Base graph (triangle-free, minimum degree >= 1) plus the clique-blowup
/// parameter p. The seed records how a random base was generated.
struct CounterexampleRecipe {
    Graph base;
    int p = 1;
    std::optional<std::uint64_t> seed;
};

/// Adds one apex vertex per edge, adjacent to exactly that edge's endpoints.
/// Every maximal clique of the result is a simplicial triangle. The base must
/// be triangle-free with no isolated vertices.
Graph glue_triangles(const Graph& base);

/// glue_triangles, then substitute p disjoint copies of K_p for every base
/// vertex (apexes stay single vertices). Order is p^2 |V(base)| + |E(base)|.
Graph build_counterexample(const CounterexampleRecipe& recipe);

/// Exact stability and clique numbers of build_counterexample(recipe),
/// computed on the base: omega = 2p+1, and alpha is the best weighted stable
/// set over the base's independent sets (weight p per base vertex, 1 per
/// surviving apex). Exhaustive in the base's independent sets.
std::pair<long long, long long> exact_alpha_omega(const CounterexampleRecipe& recipe,
                                                  int max_base_order = 30);

enum class CisCertification { oracle_verified, structural_only };

struct ViolationRow {
    int p;
    long long vertices;
    long long alpha;
    long long omega;
    bool violates; // vertices > alpha * omega
    double ratio;  // vertices / (alpha * omega)
    CisCertification certification;
};

/// Sweeps p over [p_lo, p_hi] with exact accounting. Every constructed graph
/// is CIS by construction; rows with order at most oracle_order_limit are
/// re-verified against the brute-force oracle.
std::vector<ViolationRow> find_violation(const Graph& base, int p_lo, int p_hi,
                                         int oracle_order_limit = 60,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Adds uniformly random edges, skipping any that would close a triangle,
/// until target_edges are present or no candidate remains.
Graph random_triangle_free_graph(int n, int target_edges, Rng& rng);

/// Joins every isolated vertex to the lowest-indexed other vertex; never
/// creates a triangle. Needs order >= 2.
Graph repair_isolated_vertices(const Graph& g);

} // namespace cisgraph
