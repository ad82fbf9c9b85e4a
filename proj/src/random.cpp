#include "cisgraph/random.hpp"

#include <stdexcept>

#include "cisgraph/line_graphs.hpp"
#include "cisgraph/operations.hpp"

namespace cisgraph {

Graph random_graph(int n, double edge_probability, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_probability)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, double edge_probability, Rng& rng, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_graph(n, edge_probability, rng);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_graph: rejection sampling gave up");
}

Graph random_claw_free_graph(int n, double edge_probability, Rng& rng, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_graph(n, edge_probability, rng);
        if (!contains_induced(g, Pattern::claw)) return g;
    }
    throw std::runtime_error("random_claw_free_graph: rejection sampling gave up");
}

} // namespace cisgraph
