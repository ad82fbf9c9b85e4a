#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cisgraph/graph.hpp"

namespace cisgraph {

/// Per-graph guard for the enumeration kernels; CapExceeded past this.
inline constexpr std::size_t kDefaultEnumerationCap = 1000000;

/// A complete, duplicate-free family of inclusion-maximal sets, sorted
/// lexicographically by their sorted vertex lists.
struct CliqueList {
    std::vector<VertexSet> sets;

    std::size_t size() const { return sets.size(); }
    int max_cardinality() const;
};

CliqueList maximal_cliques(const Graph& g, std::size_t cap = kDefaultEnumerationCap);
CliqueList maximal_stable_sets(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

int alpha(const Graph& g, std::size_t cap = kDefaultEnumerationCap);
int omega(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable_set(const Graph& g, const VertexSet& s);
bool is_maximal_clique(const Graph& g, const VertexSet& s);

/// True iff the clique c meets every maximal stable set. c must be a clique.
bool is_strong_clique(const Graph& g, const VertexSet& c,
                      std::size_t cap = kDefaultEnumerationCap);

/// True iff c is a clique equal to some closed neighborhood N[v].
bool is_simplicial_clique(const Graph& g, const VertexSet& c);

struct CisResult {
    bool cis;
    /// A disjoint (maximal clique, maximal stable set) pair when not CIS;
    /// the first such pair in lexicographic enumeration order.
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

/// Checks every maximal clique against every maximal stable set.
CisResult is_cis_bruteforce(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

enum class CombKind { comb, anticomb };

/// An induced k-comb or k-anticomb. clique[i] and stem[i] are index-paired:
/// in a comb they are adjacent and these are the only clique-stem edges; in
/// an anticomb they are the only non-adjacent clique-stem pairs. A settler is
/// a vertex outside the structure adjacent to every clique vertex and to no
/// stem vertex.
struct CombWitness {
    CombKind kind;
    std::vector<int> clique;
    std::vector<int> stem;
    std::optional<int> settler;
};

/// Searches induced combs (or anticombs) of size 2..k_max and returns the
/// first one, in deterministic order, that no vertex settles.
std::optional<CombWitness> find_unsettled(const Graph& g, int k_max = 3,
                                          CombKind kind = CombKind::comb);

} // namespace cisgraph
