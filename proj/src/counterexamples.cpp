#include "cisgraph/counterexamples.hpp"

#include <stdexcept>
#include <string>

#include "cisgraph/errors.hpp"
#include "cisgraph/named_graphs.hpp"
#include "cisgraph/operations.hpp"

namespace cisgraph {

namespace {

void check_base(const Graph& base) {
    if (auto t = find_triangle(base))
        throw std::invalid_argument("base graph has a triangle on vertices " +
                                    std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) +
                                    "," + std::to_string((*t)[2]));
    if (base.min_degree() == 0)
        throw std::invalid_argument("base graph has an isolated vertex");
}

} // namespace

Graph glue_triangles(const Graph& base) {
    check_base(base);
    const auto edges = base.edges();
    Graph out(base.order() + int(edges.size()));
    for (auto [u, v] : edges) out.add_edge(u, v);
    int apex = base.order();
    for (auto [u, v] : edges) {
        out.add_edge(u, apex);
        out.add_edge(v, apex);
        ++apex;
    }
    return out;
}

Graph build_counterexample(const CounterexampleRecipe& recipe) {
    if (recipe.p < 1) throw std::invalid_argument("substitution parameter p must be positive");
    const Graph glued = glue_triangles(recipe.base);
    std::vector<Graph> parts;
    parts.reserve(glued.order());
    Graph blob = complete_graph(recipe.p);
    for (int i = 1; i < recipe.p; ++i) blob = disjoint_union(blob, complete_graph(recipe.p));
    for (int v = 0; v < glued.order(); ++v)
        parts.push_back(v < recipe.base.order() ? blob : complete_graph(1));
    return substitute(glued, parts);
}

std::pair<long long, long long> exact_alpha_omega(const CounterexampleRecipe& recipe,
                                                  int max_base_order) {
    check_base(recipe.base);
    if (recipe.p < 1) throw std::invalid_argument("substitution parameter p must be positive");
    const Graph& base = recipe.base;
    if (base.order() > max_base_order)
        throw CapExceeded("base too large for exhaustive independent-set search",
                          std::size_t(base.order()));
    const long long p = recipe.p;
    const long long m = (long long)base.edge_count();

    // alpha = max over independent sets I of p|I| + (m - #edges touching I);
    // an independent I touches exactly sum of degrees over I edges.
    long long best = m; // I = empty keeps every apex
    std::vector<int> chosen;
    long long nodes = 0;
    auto rec = [&](auto&& self, int v, long long value) -> void {
        if (++nodes > 20000000)
            throw CapExceeded("independent-set search exceeded its node budget", chosen.size());
        if (value > best) best = value;
        for (int u = v; u < base.order(); ++u) {
            bool ok = true;
            for (int c : chosen)
                if (base.adjacent(c, u)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(u);
            self(self, u + 1, value + p - base.degree(u));
            chosen.pop_back();
        }
    };
    rec(rec, 0, m);
    return {best, 2 * p + 1};
}

std::vector<ViolationRow> find_violation(const Graph& base, int p_lo, int p_hi,
                                         int oracle_order_limit, std::size_t cap) {
    if (p_lo < 1 || p_hi < p_lo) throw std::invalid_argument("invalid p range");
    std::vector<ViolationRow> rows;
    for (int p = p_lo; p <= p_hi; ++p) {
        CounterexampleRecipe recipe{base, p, std::nullopt};
        auto [a, w] = exact_alpha_omega(recipe);
        const long long vertices =
            (long long)p * p * base.order() + (long long)base.edge_count();
        ViolationRow row{p,     vertices, a, w, vertices > a * w, double(vertices) / double(a * w),
                         CisCertification::structural_only};
        if (vertices <= oracle_order_limit) {
            const Graph g = build_counterexample(recipe);
            CisResult oracle = is_cis_bruteforce(g, cap);
            if (!oracle.cis)
                throw std::logic_error("construction produced a non-CIS graph; this is a bug");
            // cross-check the closed-form accounting against enumeration
            if (alpha(g, cap) != a || omega(g, cap) != w)
                throw std::logic_error("closed-form alpha/omega disagree with the oracle");
            row.certification = CisCertification::oracle_verified;
        }
        rows.push_back(row);
    }
    return rows;
}

Graph random_triangle_free_graph(int n, int target_edges, Rng& rng) {
    Graph g(n);
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
    int added = 0;
    while (added < target_edges && !candidates.empty()) {
        std::size_t i = std::size_t(rng.below(candidates.size()));
        auto [u, v] = candidates[i];
        candidates.erase(candidates.begin() + long(i));
        if (g.neighbors(u).intersects(g.neighbors(v))) continue; // would close a triangle
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

Graph repair_isolated_vertices(const Graph& g) {
    if (g.order() < 2)
        throw std::invalid_argument("cannot repair isolated vertices in a one-vertex graph");
    Graph out = g;
    for (int v = 0; v < out.order(); ++v) {
        if (out.degree(v) > 0) continue;
        out.add_edge(v, v == 0 ? 1 : 0);
    }
    return out;
}

} // namespace cisgraph
