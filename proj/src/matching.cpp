#include "cisgraph/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "cisgraph/operations.hpp"

namespace cisgraph {

bool is_matching(const Graph& g, const Matching& m) {
    VertexSet used(g.order());
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) return false;
        if (!g.adjacent(u, v)) return false;
        if (used.contains(u) || used.contains(v)) return false;
        used.add(u);
        used.add(v);
    }
    return true;
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
    if (!is_matching(g, m)) return false;
    VertexSet used(g.order());
    for (auto [u, v] : m.edges) {
        used.add(u);
        used.add(v);
    }
    for (auto [u, v] : g.edges())
        if (!used.contains(u) && !used.contains(v)) return false;
    return true;
}

std::vector<Matching> maximal_matchings(const Graph& g, std::size_t cap) {
    std::vector<Matching> out;
    for_each_maximal_matching(g, [&](const Matching& m) {
        if (out.size() >= cap) throw CapExceeded("maximal matching enumeration exceeded cap", out.size());
        out.push_back(m);
        return true;
    });
    return out;
}

int nu(const Graph& g, std::size_t cap) {
    std::size_t seen = 0;
    int best = 0;
    for_each_maximal_matching(g, [&](const Matching& m) {
        if (++seen > cap) throw CapExceeded("matching enumeration exceeded cap", seen - 1);
        best = std::max(best, int(m.size()));
        return true;
    });
    return best;
}

VertexSet internal_vertices(const Graph& g) {
    VertexSet s(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2) s.add(v);
    return s;
}

bool is_perfect_internal(const Graph& g, const Matching& m) {
    if (!is_matching(g, m)) throw std::invalid_argument("is_perfect_internal needs a matching of g");
    VertexSet used(g.order());
    for (auto [u, v] : m.edges) {
        used.add(u);
        used.add(v);
    }
    return internal_vertices(g).is_subset_of(used);
}

bool is_absorbing(const Graph& g, const Matching& m) {
    if (!is_maximal_matching(g, m))
        throw std::invalid_argument("is_absorbing is defined for maximal matchings only");
    VertexSet used(g.order());
    for (auto [u, v] : m.edges) {
        used.add(u);
        used.add(v);
    }
    for (int v = 0; v < g.order(); ++v) {
        if (used.contains(v)) continue;
        const VertexSet& nb = g.neighbors(v);
        if (nb.empty()) continue;
        bool inside_one_edge = false;
        for (auto [a, b] : m.edges) {
            VertexSet e(g.order());
            e.add(a);
            e.add(b);
            if (nb.is_subset_of(e)) {
                inside_one_edge = true;
                break;
            }
        }
        if (!inside_one_edge) return false;
    }
    return true;
}

namespace {

bool is_complete(const Graph& g) {
    return g.edge_count() == std::size_t(g.order()) * (g.order() - 1) / 2;
}

} // namespace

RimForm recognize_randomly_matchable(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("recognize_randomly_matchable needs a connected graph");
    RimForm form;
    if (g.order() % 2 == 0 && is_complete(g)) {
        form.verdict = RimVerdict::K2n;
        form.n = g.order() / 2;
        return form;
    }
    if (auto parts = complete_bipartite_parts(g); parts && parts->first.size() == parts->second.size()) {
        form.verdict = RimVerdict::Knn;
        form.side_a = std::move(parts->first);
        form.side_b = std::move(parts->second);
        form.n = int(form.side_a.size());
        return form;
    }
    form.verdict = RimVerdict::not_rim;
    return form;
}

RimForm recognize_rim(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("recognize_rim needs a connected graph");
    RimForm form = recognize_randomly_matchable(g);
    if (form.verdict != RimVerdict::not_rim) return form;

    const int n = g.order();
    if (n == 1) {
        // Vacuously matchable (no internal vertices); degenerate certificate.
        form.verdict = RimVerdict::leaf_extension;
        form.core = {0};
        return form;
    }
    if (n == 2) {
        // K_2 is caught by the K2n test above; a connected non-complete
        // 2-vertex graph does not exist.
        form.verdict = RimVerdict::not_rim;
        return form;
    }
    // Leaf-extension certificate: every internal vertex needs a pendant
    // neighbor; connectivity with n >= 3 makes every vertex internal or a
    // pendant, and keeps pendants pairwise non-adjacent.
    std::vector<std::vector<int>> pendant_of(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) pendant_of[g.neighbors(v).first()].push_back(v);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) >= 2 && pendant_of[v].empty()) {
            form.verdict = RimVerdict::not_rim;
            return form;
        }
    }
    form.verdict = RimVerdict::leaf_extension;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) >= 2) {
            form.core.push_back(v);
            form.leaves.emplace_back(v, pendant_of[v]);
        }
    }
    return form;
}

bool is_randomly_matchable_bruteforce(const Graph& g) {
    const int n = g.order();
    return for_each_maximal_matching(
        g, [&](const Matching& m) { return int(m.size()) * 2 == n; });
}

bool is_rim_bruteforce(const Graph& g) {
    const VertexSet internal = internal_vertices(g);
    return for_each_maximal_matching(g, [&](const Matching& m) {
        VertexSet used(g.order());
        for (auto [u, v] : m.edges) {
            used.add(u);
            used.add(v);
        }
        return internal.is_subset_of(used);
    });
}

} // namespace cisgraph
