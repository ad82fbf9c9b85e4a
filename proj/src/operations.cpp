#include "cisgraph/operations.hpp"

#include <stdexcept>
#include <string>

namespace cisgraph {

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int shift = g.order();
    Graph u(g.order() + h.order());
    for (auto [a, b] : g.edges()) u.add_edge(a, b);
    for (auto [a, b] : h.edges()) u.add_edge(a + shift, b + shift);
    return u;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> out;
    VertexSet seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(n);
        comp.add(s);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(n);
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<VertexSet> co_components(const Graph& g) { return components(complement(g)); }

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_co_connected(const Graph& g) { return is_connected(complement(g)); }

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    const std::vector<int> vs = s.to_vector();
    if (vs.empty()) throw std::invalid_argument("induced subgraph on the empty set");
    Graph h(int(vs.size()));
    for (int a = 0; a < int(vs.size()); ++a)
        for (int b = a + 1; b < int(vs.size()); ++b)
            if (g.adjacent(vs[a], vs[b])) h.add_edge(a, b);
    return h;
}

Graph substitute(const Graph& g, const std::vector<Graph>& parts) {
    const int n = g.order();
    if (int(parts.size()) != n)
        throw std::invalid_argument("substitute needs one replacement graph per vertex");
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + parts[v].order();
    Graph out(offset[n]);
    for (int v = 0; v < n; ++v)
        for (auto [a, b] : parts[v].edges()) out.add_edge(offset[v] + a, offset[v] + b);
    for (auto [u, v] : g.edges())
        for (int a = offset[u]; a < offset[u + 1]; ++a)
            for (int b = offset[v]; b < offset[v + 1]; ++b) out.add_edge(a, b);
    return out;
}

Graph leaf_extension(const Graph& g, const std::vector<int>& sizes) {
    const int n = g.order();
    if (int(sizes.size()) != n)
        throw std::invalid_argument("leaf_extension needs one size per vertex");
    int total = n;
    for (int v = 0; v < n; ++v) {
        if (sizes[v] < 1)
            throw std::invalid_argument("leaf set of vertex " + std::to_string(v) +
                                        " must be non-empty");
        total += sizes[v];
    }
    Graph out(total);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    int next = n;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < sizes[v]; ++i) out.add_edge(v, next++);
    return out;
}

Graph corona(const Graph& g) { return leaf_extension(g, std::vector<int>(g.order(), 1)); }

TwinReduction true_twin_reduction(const Graph& g) {
    const int n = g.order();
    std::vector<int> class_of(n, -1);
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
        const VertexSet nv = g.closed_neighborhood(v);
        for (int c = 0; c < int(reps.size()); ++c) {
            if (nv == g.closed_neighborhood(reps[c])) {
                class_of[v] = c;
                break;
            }
        }
        if (class_of[v] == -1) {
            class_of[v] = int(reps.size());
            reps.push_back(v);
        }
    }
    Graph reduced(int(reps.size()));
    for (int a = 0; a < int(reps.size()); ++a)
        for (int b = a + 1; b < int(reps.size()); ++b)
            if (g.adjacent(reps[a], reps[b])) reduced.add_edge(a, b);
    return {std::move(reduced), std::move(class_of)};
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        int w = common.first();
        if (w != -1) return std::array<int, 3>{u, v, w};
    }
    return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_parts(
    const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    bool bad = false;
    while (!stack.empty() && !bad) {
        int v = stack.back();
        stack.pop_back();
        g.neighbors(v).for_each([&](int w) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                bad = true;
            }
        });
    }
    if (bad) return std::nullopt;
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) {
        if (color[v] == -1) return std::nullopt; // disconnected
        (color[v] == 0 ? a : b).push_back(v);
    }
    if (b.empty()) return std::nullopt; // a single vertex has no bipartition here
    if (g.edge_count() != a.size() * b.size()) return std::nullopt;
    return std::make_pair(std::move(a), std::move(b));
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > 11) throw std::invalid_argument("labeled_graph_count needs 1 <= n <= 11");
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    std::uint64_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1) g.add_edge(i, j);
    return g;
}

std::uint64_t code_from_graph(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("code_from_graph needs order <= 11");
    std::uint64_t code = 0, k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) code |= std::uint64_t(1) << k;
    return code;
}

LabeledGraphs::LabeledGraphs(int n, int limit) : n_(n) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > limit)
        throw std::invalid_argument(
            "exhaustive enumeration capped at n = " + std::to_string(limit) +
            "; ingest a graph6 corpus for larger orders");
    count_ = labeled_graph_count(n);
}

} // namespace cisgraph
