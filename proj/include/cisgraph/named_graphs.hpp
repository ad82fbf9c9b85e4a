#pragma once

#include <string_view>

#include "cisgraph/graph.hpp"

namespace cisgraph {

Graph path_graph(int n);     // n >= 1
Graph cycle_graph(int n);    // n >= 3
Graph complete_graph(int n); // n >= 1
Graph complete_bipartite(int m, int n);
Graph empty_graph(int n);

/// 5 vertices, edges {01,12,23,14,24}: a triangle with two horns.
Graph bull_graph();
Graph claw_graph(); // K_{1,3}, center 0
Graph gem_graph();  // P_4 on 0..3 plus universal vertex 4
Graph wheel4_graph(); // C_4 on 0..3 plus universal vertex 4

/// k-clique 0..k-1 with pendant stem k+i attached to vertex i, k >= 2.
Graph comb_graph(int k);
Graph anticomb_graph(int k); // complement of comb_graph(k)

/// Parses "bull", "claw", "gem", "w4", "p5", "c6", "k4", "k3,3", "comb3",
/// "anticomb4" and the decorated spellings "P_5", "K_{3,3}", "comb(3)".
Graph make_named(std::string_view name);

} // namespace cisgraph
