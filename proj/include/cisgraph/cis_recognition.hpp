#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cisgraph/graph.hpp"
#include "cisgraph/line_graphs.hpp"
#include "cisgraph/sets_oracle.hpp"

namespace cisgraph {

enum class RecognitionVerdict { cis, not_cis, not_claw_free };

enum class ComponentForm { complement_pk2_qk1, line_of_knn, line_of_corona, none };

/// Structural classification of one component. The form applies to the
/// true-twin reduction of the component; all certificate data (root, sides,
/// core, pairing) is labeled in the reduction's vertex ids.
struct ComponentReport {
    std::vector<int> vertices;     // component vertices in the input graph
    std::optional<Graph> reduced;  // true-twin reduction
    std::vector<int> twin_class_of; // component-local vertex -> reduced vertex
    ComponentForm form = ComponentForm::none;
    int p = 0, q = 0, n = 0;
    std::optional<RootCertificate> root;           // forms (ii) and (iii)
    std::vector<int> side_a, side_b;               // form (ii): root bipartition
    std::optional<Graph> core;                     // form (iii): triangle-free core
    std::vector<std::pair<int, int>> host_leaf;    // form (iii): pairing in the root
};

struct Refutation {
    enum class Kind { claw, unsettled_comb, component_without_form };
    Kind kind;
    std::vector<int> claw;             // kind == claw: embedding in the input graph
    std::optional<CombWitness> comb;   // kind == unsettled_comb (input-graph ids)
    int component_index = -1;          // kind == component_without_form
};

struct RecognitionReport {
    RecognitionVerdict verdict = RecognitionVerdict::not_cis;
    std::vector<ComponentReport> components;
    std::optional<Refutation> refutation;
};

/// Polynomial-time CIS recognition for claw-free graphs: reject on an
/// induced claw, then classify the true-twin reduction of every component as
/// one of the three structural forms. The graph is CIS exactly when every
/// component carries a form.
RecognitionReport recognize_claw_free_cis(const Graph& g);

struct AlphaOmegaReport {
    int order;
    int alpha;
    int omega;
    bool bound_holds; // |V| <= alpha * omega
};

AlphaOmegaReport check_alpha_omega(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

struct WeightedBoundReport {
    long long total_weight;        // w(E)
    long long max_weighted_degree; // max over vertices of the incident weight sum
    int matching_number;
    bool holds; // w(E) <= max_weighted_degree * matching_number
};

/// Weighted degree/matching bound; the base graph must be connected.
WeightedBoundReport check_weighted_bound(const WeightedGraph& hw,
                                         std::size_t cap = kDefaultEnumerationCap);

/// log(max(alpha, omega)) / log |V|: the epsilon with max(alpha, omega) =
/// |V|^epsilon. Requires |V| >= 2.
double erdos_hajnal_stat(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

} // namespace cisgraph
