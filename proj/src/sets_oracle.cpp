#include "cisgraph/sets_oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cisgraph/errors.hpp"
#include "cisgraph/operations.hpp"

namespace cisgraph {

namespace {

// Pivoted recursive expansion over (current, candidates, excluded).
// Candidates are tried in ascending id order, so the recursion is
// deterministic; results are sorted afterwards for stable reports.
void expand(const Graph& g, VertexSet& current, VertexSet candidates, VertexSet excluded,
            std::vector<VertexSet>& out, std::size_t cap) {
    if (candidates.empty() && excluded.empty()) {
        if (out.size() >= cap) throw CapExceeded("maximal set enumeration exceeded cap", out.size());
        out.push_back(current);
        return;
    }
    int pivot = -1, best = -1;
    VertexSet both = candidates | excluded;
    both.for_each([&](int u) {
        int score = (candidates & g.neighbors(u)).count();
        if (score > best) {
            best = score;
            pivot = u;
        }
    });
    VertexSet branch = candidates - g.neighbors(pivot);
    branch.for_each([&](int v) {
        current.add(v);
        expand(g, current, candidates & g.neighbors(v), excluded & g.neighbors(v), out, cap);
        current.remove(v);
        candidates.remove(v);
        excluded.add(v);
    });
}

std::vector<int> sorted_vertices(const VertexSet& s) { return s.to_vector(); }

} // namespace

int CliqueList::max_cardinality() const {
    int best = 0;
    for (const auto& s : sets) best = std::max(best, s.count());
    return best;
}

CliqueList maximal_cliques(const Graph& g, std::size_t cap) {
    CliqueList list;
    VertexSet current(g.order());
    expand(g, current, VertexSet::full(g.order()), VertexSet(g.order()), list.sets, cap);
    std::sort(list.sets.begin(), list.sets.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  return sorted_vertices(a) < sorted_vertices(b);
              });
    return list;
}

CliqueList maximal_stable_sets(const Graph& g, std::size_t cap) {
    return maximal_cliques(complement(g), cap);
}

int alpha(const Graph& g, std::size_t cap) { return maximal_stable_sets(g, cap).max_cardinality(); }

int omega(const Graph& g, std::size_t cap) { return maximal_cliques(g, cap).max_cardinality(); }

bool is_clique(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int u) {
        if (!ok) return;
        s.for_each([&](int v) {
            if (u < v && !g.adjacent(u, v)) ok = false;
        });
    });
    return ok;
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int u) {
        if (!ok) return;
        if (s.intersects(g.neighbors(u))) ok = false;
    });
    return ok;
}

bool is_maximal_clique(const Graph& g, const VertexSet& s) {
    if (s.empty() || !is_clique(g, s)) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        if (s.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_strong_clique(const Graph& g, const VertexSet& c, std::size_t cap) {
    if (!is_clique(g, c)) throw std::invalid_argument("is_strong_clique needs a clique");
    for (const auto& s : maximal_stable_sets(g, cap).sets)
        if (!c.intersects(s)) return false;
    return true;
}

bool is_simplicial_clique(const Graph& g, const VertexSet& c) {
    if (c.empty() || !is_clique(g, c)) return false;
    bool found = false;
    c.for_each([&](int v) {
        if (!found && g.closed_neighborhood(v) == c) found = true;
    });
    return found;
}

CisResult is_cis_bruteforce(const Graph& g, std::size_t cap) {
    const CliqueList cliques = maximal_cliques(g, cap);
    const CliqueList stables = maximal_stable_sets(g, cap);
    for (const auto& c : cliques.sets)
        for (const auto& s : stables.sets)
            if (!c.intersects(s)) return {false, std::make_pair(c, s)};
    return {true, std::nullopt};
}

namespace {

// Extends a partial pairing of stems onto the fixed clique. cand[i] holds the
// vertices adjacent to clique[i] and to no other clique vertex.
bool assign_stems(const Graph& g, const std::vector<int>& clique,
                  const std::vector<VertexSet>& cand, std::size_t i, std::vector<int>& stem,
                  const std::function<bool(const std::vector<int>&)>& emit) {
    if (i == clique.size()) return emit(stem);
    bool stop = false;
    cand[i].for_each([&](int w) {
        if (stop) return;
        for (std::size_t j = 0; j < i; ++j)
            if (stem[j] == w || g.adjacent(stem[j], w)) return;
        stem.push_back(w);
        stop = assign_stems(g, clique, cand, i + 1, stem, emit);
        stem.pop_back();
    });
    return stop;
}

// Enumerates induced k-combs (clique ascending, stems paired) and feeds them
// to emit until it returns true.
bool for_each_comb(const Graph& g, int k, const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& emit) {
    const int n = g.order();
    std::vector<int> clique;
    std::function<bool(int)> grow = [&](int lo) -> bool {
        if (int(clique.size()) == k) {
            std::vector<VertexSet> cand(clique.size(), VertexSet(n));
            for (std::size_t i = 0; i < clique.size(); ++i) {
                VertexSet c = g.neighbors(clique[i]);
                for (std::size_t j = 0; j < clique.size(); ++j) {
                    if (j == i) continue;
                    c -= g.neighbors(clique[j]);
                    c.remove(clique[j]);
                }
                c.remove(clique[i]);
                cand[i] = c;
            }
            std::vector<int> stem;
            return assign_stems(g, clique, cand, 0, stem,
                                [&](const std::vector<int>& st) { return emit(clique, st); });
        }
        for (int v = lo; v < n; ++v) {
            bool ok = true;
            for (int u : clique)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(v);
            if (grow(v + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    return grow(0);
}

std::optional<int> find_settler(const Graph& g, const std::vector<int>& clique,
                                const std::vector<int>& stem) {
    for (int x = 0; x < g.order(); ++x) {
        bool inside = false;
        for (int v : clique)
            if (v == x) inside = true;
        for (int w : stem)
            if (w == x) inside = true;
        if (inside) continue;
        bool ok = true;
        for (int v : clique)
            if (!g.adjacent(x, v)) {
                ok = false;
                break;
            }
        for (int w : stem)
            if (ok && g.adjacent(x, w)) ok = false;
        if (ok) return x;
    }
    return std::nullopt;
}

} // namespace

std::optional<CombWitness> find_unsettled(const Graph& g, int k_max, CombKind kind) {
    if (k_max < 2) throw std::invalid_argument("comb search needs k_max >= 2");
    if (kind == CombKind::anticomb) {
        // An anticomb of G is a comb of the complement; its split partition
        // swaps the roles, and settling transfers verbatim.
        auto w = find_unsettled(complement(g), k_max, CombKind::comb);
        if (!w) return std::nullopt;
        return CombWitness{CombKind::anticomb, std::move(w->stem), std::move(w->clique),
                           std::nullopt};
    }
    std::optional<CombWitness> found;
    for (int k = 2; k <= k_max && !found; ++k) {
        for_each_comb(g, k, [&](const std::vector<int>& clique, const std::vector<int>& stem) {
            if (find_settler(g, clique, stem)) return false;
            found = CombWitness{CombKind::comb, clique, stem, std::nullopt};
            return true;
        });
    }
    return found;
}

} // namespace cisgraph
