#pragma once

// Test-only helpers: seeded random graphs and brute-force oracles kept
// independent of the library's search machinery.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hexact/graph.hpp"

namespace testutil {

using hexact::SmallGraph;

inline SmallGraph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    SmallGraph g = hexact::make_empty(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

inline SmallGraph random_bipartite(std::mt19937& rng, int a, int b, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    SmallGraph g = hexact::make_empty(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

inline SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm) {
    SmallGraph out = hexact::make_empty(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) out.add_edge(perm[i], perm[j]);
    return out;
}

inline SmallGraph random_relabel(std::mt19937& rng, const SmallGraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

namespace detail {

inline bool inj_rec(const SmallGraph& host, const SmallGraph& pat, std::vector<int>& map,
                    std::uint32_t used, int p) {
    if (p == pat.n) {
        for (int i = 0; i < pat.n; ++i)
            for (int j = i + 1; j < pat.n; ++j)
                if (pat.has_edge(i, j) && !host.has_edge(map[i], map[j])) return false;
        return true;
    }
    for (int v = 0; v < host.n; ++v) {
        if (used >> v & 1u) continue;
        map[p] = v;
        if (inj_rec(host, pat, map, used | (1u << v), p + 1)) return true;
    }
    return false;
}

}  // namespace detail

// All injections, edge check only at the leaves.
inline bool brute_contains(const SmallGraph& host, const SmallGraph& pat) {
    if (pat.n > host.n) return false;
    std::vector<int> map(pat.n, -1);
    return detail::inj_rec(host, pat, map, 0, 0);
}

inline int brute_alpha(const SmallGraph& g) {
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
        bool ok = true;
        for (int i = 0; ok && i < g.n; ++i)
            if (s >> i & 1u)
                if ((g.adj[i] & s) != 0) ok = false;
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

}  // namespace testutil
