#include "cisgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cisgraph {

Graph::Graph(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("graph order must be at least 1, got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
    ++m_;
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v))
            out.emplace_back(u, v);
    return out;
}

} // namespace cisgraph
