#include "cisgraph/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <string>

namespace cisgraph {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kMaxParsedOrder = 100000; // adjacency memory guard

std::string_view strip_trailing_eol(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int graph6_byte(std::string_view s, std::size_t pos, std::size_t base) {
    if (pos >= s.size()) throw ParseError("truncated graph6 data", base + s.size());
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte out of range 63..126", base + pos);
    return c - 63;
}

// base is the offset of this line within the original input.
Graph parse_graph6_line(std::string_view s, std::size_t base) {
    if (s.substr(0, kGraph6Header.size()) == kGraph6Header) {
        s.remove_prefix(kGraph6Header.size());
        base += kGraph6Header.size();
    }
    if (s.empty()) throw ParseError("empty graph6 input", base);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (s[0] != '~') {
        n = static_cast<std::uint64_t>(graph6_byte(s, 0, base));
        pos = 1;
    } else if (s.size() >= 2 && s[1] == '~') {
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(graph6_byte(s, 2 + static_cast<std::size_t>(i), base));
        pos = 8;
    } else {
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(graph6_byte(s, 1 + static_cast<std::size_t>(i), base));
        pos = 4;
    }
    if (n == 0) throw ParseError("order-0 graph rejected (graphs here are non-null)", base);
    if (n > kMaxParsedOrder) throw ParseError("graph order exceeds parser limit", base);

    const int order = static_cast<int>(n);
    const std::uint64_t bits = n * (n - 1) / 2;
    const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < groups) throw ParseError("truncated graph6 edge data", base + s.size());
    if (s.size() - pos > groups) throw ParseError("trailing data after graph6 encoding", base + pos + groups);

    Graph g(order);
    std::uint64_t k = 0;
    int i = 0, j = 1;
    for (std::size_t gi = 0; gi < groups; ++gi) {
        int val = graph6_byte(s, pos + gi, base);
        for (int b = 5; b >= 0; --b, ++k) {
            bool bit = (val >> b) & 1;
            if (k < bits) {
                if (bit) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (bit) {
                throw ParseError("nonzero padding bits in graph6 encoding", base + pos + gi);
            }
        }
    }
    return g;
}

bool parse_int(std::string_view s, std::size_t& pos, long long& out) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    long long val = 0;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        val = val * 10 + (s[pos] - '0');
        if (val > kMaxParsedOrder * 2LL) val = kMaxParsedOrder * 2LL; // clamp, range-checked later
        ++pos;
        ++digits;
    }
    if (digits == 0) {
        pos = start;
        return false;
    }
    out = neg ? -val : val;
    return true;
}

Graph parse_edgelist(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };
    skip_ws();
    long long n = 0;
    std::size_t n_pos = pos;
    if (!parse_int(text, pos, n)) throw ParseError("expected vertex count", n_pos);
    if (n < 1 || n > kMaxParsedOrder) throw ParseError("vertex count out of range", n_pos);
    Graph g(static_cast<int>(n));
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        std::size_t u_pos = pos;
        long long u = 0, v = 0;
        if (!parse_int(text, pos, u)) throw ParseError("expected edge endpoint", u_pos);
        skip_ws();
        std::size_t v_pos = pos;
        if (!parse_int(text, pos, v)) throw ParseError("expected second edge endpoint", v_pos);
        if (u < 0 || u >= n) throw ParseError("vertex id out of range", u_pos);
        if (v < 0 || v >= n) throw ParseError("vertex id out of range", v_pos);
        if (u == v) throw ParseError("self-loop rejected", u_pos);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::graph6:
        return parse_graph6_line(strip_trailing_eol(text), 0);
    case GraphFormat::edgelist:
        return parse_edgelist(text);
    }
    throw std::invalid_argument("unknown graph format");
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = strip_trailing_eol(text.substr(pos, eol - pos));
        if (!line.empty()) out.push_back(parse_graph6_line(line, pos));
        pos = eol + 1;
    }
    return out;
}

std::string to_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int i = 5; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    }
    int val = 0;
    int nbits = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(val + 63));
                val = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((val << (6 - nbits)) + 63));
    return out;
}

std::string to_edgelist(const Graph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

} // namespace cisgraph
