#include "cisgraph/named_graphs.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "cisgraph/operations.hpp"

namespace cisgraph {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite parts must be non-empty");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph bull_graph() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
}

Graph claw_graph() { return complete_bipartite(1, 3); }

Graph gem_graph() {
    Graph gem(5);
    for (auto [u, v] : path_graph(4).edges()) gem.add_edge(u, v);
    for (int v = 0; v < 4; ++v) gem.add_edge(v, 4);
    return gem;
}

Graph wheel4_graph() {
    Graph w(5);
    for (auto [u, v] : cycle_graph(4).edges()) w.add_edge(u, v);
    for (int v = 0; v < 4; ++v) w.add_edge(v, 4);
    return w;
}

Graph comb_graph(int k) {
    if (k < 2) throw std::invalid_argument("comb parameter must be at least 2");
    Graph g(2 * k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
    return g;
}

Graph anticomb_graph(int k) { return complement(comb_graph(k)); }

namespace {

// Lowercases and drops the decoration characters "_{}() ".
std::string canonical_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '_' || c == '{' || c == '}' || c == '(' || c == ')' || c == ' ') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

bool parse_number(const std::string& s, std::size_t pos, int& out, std::size_t& end) {
    end = pos;
    long long val = 0;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) {
        val = val * 10 + (s[end] - '0');
        if (val > 1000000) return false;
        ++end;
    }
    if (end == pos) return false;
    out = static_cast<int>(val);
    return true;
}

} // namespace

Graph make_named(std::string_view name) {
    const std::string s = canonical_name(name);
    if (s == "bull") return bull_graph();
    if (s == "claw") return claw_graph();
    if (s == "gem") return gem_graph();
    if (s == "w4") return wheel4_graph();

    auto fail = [&] {
        throw std::invalid_argument("unknown graph name: " + std::string(name));
    };

    int a = 0, b = 0;
    std::size_t end = 0;
    if (s.rfind("anticomb", 0) == 0) {
        if (!parse_number(s, 8, a, end) || end != s.size()) fail();
        return anticomb_graph(a);
    }
    if (s.rfind("comb", 0) == 0) {
        if (!parse_number(s, 4, a, end) || end != s.size()) fail();
        return comb_graph(a);
    }
    if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'c' || s[0] == 'k')) {
        if (!parse_number(s, 1, a, end)) fail();
        if (end == s.size()) {
            if (s[0] == 'p') return path_graph(a);
            if (s[0] == 'c') return cycle_graph(a);
            return complete_graph(a);
        }
        if (s[0] == 'k' && s[end] == ',' && parse_number(s, end + 1, b, end) && end == s.size())
            return complete_bipartite(a, b);
        fail();
    }
    fail();
    return Graph(1); // unreachable
}

} // namespace cisgraph
