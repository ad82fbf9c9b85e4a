#include "cisgraph/line_graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cisgraph/matching.hpp"
#include "cisgraph/operations.hpp"
#include "cisgraph/named_graphs.hpp"

namespace cisgraph {

WeightedGraph with_unit_weights(const Graph& base) {
    return {base, std::vector<int>(base.edge_count(), 1)};
}

bool verify_root_certificate(const Graph& g, const RootCertificate& cert) {
    const auto& map = cert.edge_of_vertex;
    if (int(map.size()) != g.order()) return false;
    if (cert.root.edge_count() != std::size_t(g.order())) return false;
    std::map<std::pair<int, int>, int> seen;
    for (int v = 0; v < g.order(); ++v) {
        auto [a, b] = map[v];
        if (a == b || a < 0 || b < 0 || a >= cert.root.order() || b >= cert.root.order())
            return false;
        if (!cert.root.adjacent(a, b)) return false;
        auto key = std::minmax(a, b);
        if (!seen.emplace(std::make_pair(key.first, key.second), v).second) return false;
    }
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            auto [a, b] = map[u];
            auto [c, d] = map[v];
            bool share = a == c || a == d || b == c || b == d;
            if (share != g.adjacent(u, v)) return false;
        }
    }
    return true;
}

LineGraphResult line_graph(const Graph& h) {
    const auto edges = h.edges();
    if (edges.empty()) throw std::invalid_argument("line graph of an edgeless graph is null");
    Graph line(int(edges.size()));
    for (int i = 0; i < int(edges.size()); ++i) {
        for (int j = i + 1; j < int(edges.size()); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) line.add_edge(i, j);
        }
    }
    return {std::move(line), {h, edges}};
}

Graph line_graph_weighted(const WeightedGraph& hw) {
    if (hw.weight.size() != hw.base.edge_count())
        throw std::invalid_argument("weight vector must match the edge list");
    for (int w : hw.weight)
        if (w < 1) throw std::invalid_argument("edge multiplicities must be positive");
    LineGraphResult plain = line_graph(hw.base);
    std::vector<Graph> parts;
    parts.reserve(hw.weight.size());
    for (int w : hw.weight) parts.push_back(complete_graph(w));
    return substitute(plain.line, parts);
}

namespace {

// Backtracking construction of a Krausz partition: the edge set is split
// into cliques with every vertex in at most two of them, and any two cliques
// sharing at most one vertex (so the reconstructed root is simple). Parts
// are created whole when their lexicographically first edge is reached,
// which visits every such partition exactly once.
struct KrauszSearch {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<int> part_of_edge;          // -1 = uncovered
    std::vector<std::vector<int>> parts;    // vertex lists
    std::vector<std::vector<int>> vertex_parts;
    std::vector<std::vector<std::vector<int>>> complete; // collected partitions
    bool collect_all = false;

    explicit KrauszSearch(const Graph& graph) : g(graph), edges(graph.edges()) {
        for (int i = 0; i < int(edges.size()); ++i) edge_id[edges[i]] = i;
        part_of_edge.assign(edges.size(), -1);
        vertex_parts.resize(g.order());
    }

    int id(int u, int v) const { return edge_id.at(std::minmax(u, v)); }

    bool covered(int u, int v) const { return part_of_edge[id(u, v)] != -1; }

    bool share_existing_part(int u, int v) const {
        for (int p : vertex_parts[u])
            for (int q : vertex_parts[v])
                if (p == q) return true;
        return false;
    }

    void apply(const std::vector<int>& q) {
        int pid = int(parts.size());
        parts.push_back(q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            vertex_parts[q[i]].push_back(pid);
            for (std::size_t j = i + 1; j < q.size(); ++j) part_of_edge[id(q[i], q[j])] = pid;
        }
    }

    void undo(const std::vector<int>& q) {
        int pid = int(parts.size()) - 1;
        for (std::size_t i = 0; i < q.size(); ++i) {
            vertex_parts[q[i]].pop_back();
            for (std::size_t j = i + 1; j < q.size(); ++j) part_of_edge[id(q[i], q[j])] = -1;
        }
        parts.pop_back();
        (void)pid;
    }

    // All cliques through {u,v} usable as the part of edge (u,v).
    std::vector<std::vector<int>> candidates(int u, int v) {
        std::vector<std::vector<int>> result;
        if (vertex_parts[u].size() >= 2 || vertex_parts[v].size() >= 2) return result;
        if (share_existing_part(u, v)) return result;
        std::vector<int> ext;
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        common.for_each([&](int w) {
            if (vertex_parts[w].size() >= 2) return;
            if (covered(u, w) || covered(v, w)) return;
            if (share_existing_part(u, w) || share_existing_part(v, w)) return;
            ext.push_back(w);
        });
        std::vector<int> chosen;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == ext.size()) {
                std::vector<int> q{u, v};
                q.insert(q.end(), chosen.begin(), chosen.end());
                std::sort(q.begin(), q.end());
                result.push_back(std::move(q));
                return;
            }
            // branch: include ext[i] if compatible with current choice
            int w = ext[i];
            bool ok = true;
            for (int x : chosen) {
                if (!g.adjacent(x, w) || covered(x, w) || share_existing_part(x, w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen.push_back(w);
                rec(i + 1);
                chosen.pop_back();
            }
            rec(i + 1);
        };
        rec(0);
        // larger parts first; deterministic tie-break by vertex list
        std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        return result;
    }

    bool solve() {
        int next = -1;
        for (int e = 0; e < int(edges.size()); ++e) {
            if (part_of_edge[e] == -1) {
                next = e;
                break;
            }
        }
        if (next == -1) {
            complete.push_back(parts);
            return !collect_all;
        }
        auto [u, v] = edges[next];
        for (const auto& q : candidates(u, v)) {
            apply(q);
            bool done = solve();
            undo(q);
            if (done) return true;
        }
        return false;
    }
};

RootCertificate root_from_partition(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<std::vector<int>> vertex_parts(g.order());
    for (int pid = 0; pid < int(parts.size()); ++pid)
        for (int v : parts[pid]) vertex_parts[v].push_back(pid);
    int root_n = int(parts.size());
    std::vector<std::pair<int, int>> edge_of_vertex(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto& ps = vertex_parts[v];
        if (ps.size() == 2) {
            edge_of_vertex[v] = {ps[0], ps[1]};
        } else if (ps.size() == 1) {
            edge_of_vertex[v] = {ps[0], root_n};
            ++root_n; // pendant pad vertex
        } else {
            throw std::logic_error("vertex not covered by the partition");
        }
    }
    Graph root(root_n);
    for (auto [a, b] : edge_of_vertex) root.add_edge(a, b);
    return {std::move(root), std::move(edge_of_vertex)};
}

} // namespace

std::optional<RootCertificate> line_root(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("line_root needs a connected graph");
    if (g.order() == 1) {
        // K_1 = L(K_2)
        return RootCertificate{complete_graph(2), {{0, 1}}};
    }
    KrauszSearch search(g);
    // Small graphs can admit several partitions (K_3 most prominently); pick
    // one with a triangle-free root when available.
    search.collect_all = g.order() <= 6;
    search.solve();
    if (search.complete.empty()) return std::nullopt;
    std::optional<RootCertificate> best;
    for (const auto& parts : search.complete) {
        RootCertificate cert = root_from_partition(g, parts);
        if (!find_triangle(cert.root)) return cert; // first triangle-free root wins
        if (!best) best = std::move(cert);
    }
    return best;
}

std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern pattern) {
    const int n = g.order();
    switch (pattern) {
    case Pattern::claw:
        for (int c = 0; c < n; ++c) {
            const auto nb = g.neighbors(c).to_vector();
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    if (g.adjacent(nb[i], nb[j])) continue;
                    for (std::size_t k = j + 1; k < nb.size(); ++k) {
                        if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
                        return std::vector<int>{c, nb[i], nb[j], nb[k]};
                    }
                }
        }
        return std::nullopt;
    case Pattern::gem:
        // induced path (s,t,u,v) around the middle edge {t,u}, then a vertex
        // adjacent to all four
        for (int t = 0; t < n; ++t) {
            for (int u = 0; u < n; ++u) {
                if (u == t || !g.adjacent(t, u)) continue;
                for (int s = 0; s < n; ++s) {
                    if (s == t || s == u || !g.adjacent(s, t) || g.adjacent(s, u)) continue;
                    for (int v = 0; v < n; ++v) {
                        if (v == s || v == t || v == u) continue;
                        if (!g.adjacent(u, v) || g.adjacent(t, v) || g.adjacent(s, v)) continue;
                        for (int w = 0; w < n; ++w) {
                            if (w == s || w == t || w == u || w == v) continue;
                            if (g.adjacent(w, s) && g.adjacent(w, t) && g.adjacent(w, u) &&
                                g.adjacent(w, v))
                                return std::vector<int>{s, t, u, v, w};
                        }
                    }
                }
            }
        }
        return std::nullopt;
    case Pattern::w4:
        // induced 4-cycle (a,b,c,d) plus a vertex adjacent to all of it
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!g.adjacent(a, b)) continue;
                for (int c = 0; c < n; ++c) {
                    if (c == a || c == b || g.adjacent(a, c) || !g.adjacent(b, c)) continue;
                    for (int d = 0; d < n; ++d) {
                        if (d == a || d == b || d == c) continue;
                        if (!g.adjacent(c, d) || !g.adjacent(d, a) || g.adjacent(b, d)) continue;
                        for (int z = 0; z < n; ++z) {
                            if (z == a || z == b || z == c || z == d) continue;
                            if (g.adjacent(z, a) && g.adjacent(z, b) && g.adjacent(z, c) &&
                                g.adjacent(z, d))
                                return std::vector<int>{a, b, c, d, z};
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }
    throw std::invalid_argument("unknown pattern");
}

std::optional<std::vector<int>> contains_bull_subgraph(const Graph& g) {
    const int n = g.order();
    // horns t1-a, t2-b around a triangle {a,b,apex}; extra edges allowed
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b)) continue;
            VertexSet apexes = g.neighbors(a) & g.neighbors(b);
            int apex = apexes.first();
            if (apex == -1) continue;
            for (int t1 = 0; t1 < n; ++t1) {
                if (t1 == a || t1 == b || !g.adjacent(t1, a)) continue;
                for (int t2 = 0; t2 < n; ++t2) {
                    if (t2 == a || t2 == b || t2 == t1 || !g.adjacent(t2, b)) continue;
                    // pick an apex distinct from the horn tips
                    for (int x = apexes.first(); x != -1; x = apexes.next(x)) {
                        if (x != t1 && x != t2) return std::vector<int>{t1, t2, a, b, x};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_domino(const Graph& g, std::size_t cap) {
    const CliqueList cliques = maximal_cliques(g, cap);
    for (int v = 0; v < g.order(); ++v) {
        int hits = 0;
        for (const auto& c : cliques.sets)
            if (c.contains(v) && ++hits > 2) return false;
    }
    return true;
}

bool is_cis_line(const Graph& h, std::size_t cap) {
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0)
            throw std::invalid_argument("is_cis_line needs a graph without isolated vertices");
    if (contains_bull_subgraph(h)) return false;
    std::size_t seen = 0;
    return for_each_maximal_matching(h, [&](const Matching& m) {
        if (++seen > cap) throw CapExceeded("matching enumeration exceeded cap", seen - 1);
        return is_absorbing(h, m);
    });
}

} // namespace cisgraph
