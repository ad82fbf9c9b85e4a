#include "cisgraph/cis_recognition.hpp"

#include <cmath>
#include <stdexcept>

#include "cisgraph/matching.hpp"
#include "cisgraph/operations.hpp"
#include "cisgraph/named_graphs.hpp"

namespace cisgraph {

namespace {

// Form (i): the complement is a perfect matching on 2p vertices plus q <= 1
// isolated vertices, read off the degree sequence.
bool match_complement_pk2_qk1(const Graph& r, int& p, int& q) {
    const int n = r.order();
    p = q = 0;
    for (int v = 0; v < n; ++v) {
        int co_degree = n - 1 - r.degree(v);
        if (co_degree == 0)
            ++q;
        else if (co_degree == 1)
            ++p; // counted per endpoint; halved below
        else
            return false;
    }
    if (q > 1) return false;
    p /= 2;
    return true;
}

// Form (ii): the root is a balanced complete bipartite graph.
bool match_root_knn(const Graph& root, int& n_out, std::vector<int>& side_a,
                    std::vector<int>& side_b) {
    auto parts = complete_bipartite_parts(root);
    if (!parts || parts->first.size() != parts->second.size()) return false;
    side_a = std::move(parts->first);
    side_b = std::move(parts->second);
    n_out = int(side_a.size());
    return true;
}

// Form (iii): the root is the corona of a triangle-free graph. Every root
// vertex is a pendant leaf or a host with exactly one pendant neighbor.
bool match_root_corona(const Graph& root, std::optional<Graph>& core,
                       std::vector<std::pair<int, int>>& host_leaf) {
    const int n = root.order();
    host_leaf.clear();
    if (n == 2) {
        // K_2 is the corona of K_1
        core = complete_graph(1);
        host_leaf = {{0, 1}};
        return true;
    }
    VertexSet hosts(n);
    for (int v = 0; v < n; ++v) {
        if (root.degree(v) == 1) continue;
        int leaf = -1;
        for (int w = root.neighbors(v).first(); w != -1; w = root.neighbors(v).next(w)) {
            if (root.degree(w) == 1) {
                if (leaf != -1) return false; // two leaves on one host
                leaf = w;
            }
        }
        if (leaf == -1) return false; // host without a leaf
        hosts.add(v);
        host_leaf.emplace_back(v, leaf);
    }
    if (hosts.empty()) return false;
    // every degree-1 vertex must be one of the matched leaves
    if (int(host_leaf.size()) * 2 != n) return false;
    Graph c = induced_subgraph(root, hosts);
    if (find_triangle(c)) return false;
    core = std::move(c);
    return true;
}

void classify_component(ComponentReport& report) {
    const Graph& r = *report.reduced;
    if (match_complement_pk2_qk1(r, report.p, report.q)) {
        report.form = ComponentForm::complement_pk2_qk1;
        return;
    }
    auto root = line_root(r);
    if (!root) {
        report.form = ComponentForm::none;
        return;
    }
    if (match_root_knn(root->root, report.n, report.side_a, report.side_b)) {
        report.form = ComponentForm::line_of_knn;
        report.root = std::move(root);
        return;
    }
    if (match_root_corona(root->root, report.core, report.host_leaf)) {
        report.form = ComponentForm::line_of_corona;
        report.root = std::move(root);
        return;
    }
    report.form = ComponentForm::none;
}

} // namespace

RecognitionReport recognize_claw_free_cis(const Graph& g) {
    RecognitionReport report;
    if (auto claw = contains_induced(g, Pattern::claw)) {
        report.verdict = RecognitionVerdict::not_claw_free;
        report.refutation = Refutation{Refutation::Kind::claw, std::move(*claw), std::nullopt, -1};
        return report;
    }
    bool all_ok = true;
    for (const VertexSet& comp : components(g)) {
        ComponentReport cr;
        cr.vertices = comp.to_vector();
        Graph local = induced_subgraph(g, comp);
        TwinReduction tr = true_twin_reduction(local);
        cr.reduced = std::move(tr.reduced);
        cr.twin_class_of = std::move(tr.class_of);
        classify_component(cr);
        if (cr.form == ComponentForm::none) all_ok = false;
        report.components.push_back(std::move(cr));
    }
    if (all_ok) {
        report.verdict = RecognitionVerdict::cis;
        return report;
    }
    report.verdict = RecognitionVerdict::not_cis;
    // Attach the most informative cheap witness: an unsettled comb or
    // anticomb inside a failing component, translated to input ids.
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        ComponentReport& cr = report.components[i];
        if (cr.form != ComponentForm::none) continue;
        VertexSet comp(g.order());
        for (int v : cr.vertices) comp.add(v);
        Graph local = induced_subgraph(g, comp);
        for (CombKind kind : {CombKind::comb, CombKind::anticomb}) {
            if (auto w = find_unsettled(local, 3, kind)) {
                for (int& v : w->clique) v = cr.vertices[v];
                for (int& v : w->stem) v = cr.vertices[v];
                report.refutation =
                    Refutation{Refutation::Kind::unsettled_comb, {}, std::move(w), int(i)};
                return report;
            }
        }
        report.refutation =
            Refutation{Refutation::Kind::component_without_form, {}, std::nullopt, int(i)};
        return report;
    }
    return report;
}

AlphaOmegaReport check_alpha_omega(const Graph& g, std::size_t cap) {
    const int a = alpha(g, cap);
    const int w = omega(g, cap);
    return {g.order(), a, w, g.order() <= a * w};
}

WeightedBoundReport check_weighted_bound(const WeightedGraph& hw, std::size_t cap) {
    if (!is_connected(hw.base))
        throw std::invalid_argument("check_weighted_bound needs a connected graph");
    if (hw.weight.size() != hw.base.edge_count())
        throw std::invalid_argument("weight vector must match the edge list");
    const auto edges = hw.base.edges();
    long long total = 0;
    std::vector<long long> wdeg(hw.base.order(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (hw.weight[i] < 1) throw std::invalid_argument("edge multiplicities must be positive");
        total += hw.weight[i];
        wdeg[edges[i].first] += hw.weight[i];
        wdeg[edges[i].second] += hw.weight[i];
    }
    long long max_wdeg = 0;
    for (long long d : wdeg) max_wdeg = std::max(max_wdeg, d);
    const int matching_number = nu(hw.base, cap);
    return {total, max_wdeg, matching_number, total <= max_wdeg * matching_number};
}

double erdos_hajnal_stat(const Graph& g, std::size_t cap) {
    if (g.order() < 2)
        throw std::invalid_argument("erdos_hajnal_stat needs at least two vertices");
    const int m = std::max(alpha(g, cap), omega(g, cap));
    return std::log(double(m)) / std::log(double(g.order()));
}

} // namespace cisgraph
