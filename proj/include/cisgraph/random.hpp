#pragma once

#include <cstdint>

#include "cisgraph/graph.hpp"

namespace cisgraph {

/// splitmix64 stream: tiny, seedable, and stable across platforms, so seeded
/// reports are byte-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int range(int lo, int hi) { return lo + int(below(std::uint64_t(hi - lo + 1))); }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

Graph random_graph(int n, double edge_probability, Rng& rng);

/// Rejection-samples until the predicate-style condition holds; throws after
/// max_tries failures.
Graph random_connected_graph(int n, double edge_probability, Rng& rng, int max_tries = 100000);
Graph random_claw_free_graph(int n, double edge_probability, Rng& rng, int max_tries = 1000000);

} // namespace cisgraph
