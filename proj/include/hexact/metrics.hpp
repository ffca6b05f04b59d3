#pragma once

// Exact invariants: independence number (branch and bound with a degree-one
// reduction), matching number (branch and bound seeded by a greedy matching),
// vertex cover via the Gallai identity, degeneracy by repeated deletion.

#include "hexact/graph.hpp"

namespace hexact {

struct GraphMetrics {
    int alpha;       // independence number
    int mu;          // matching number
    int tau;         // vertex cover number, n - alpha
    int degeneracy;
    int edges;
};

namespace detail {

inline int mis_rec(const SmallGraph& g, std::uint32_t pool) {
    int taken = 0;
    for (;;) {
        if (!pool) return taken;
        // a vertex with at most one pool neighbor belongs to some maximum set
        bool reduced = false;
        for (std::uint32_t m = pool; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const std::uint32_t nb = g.adj[v] & pool;
            if (std::popcount(nb) <= 1) {
                pool &= ~(nb | (1u << v));
                ++taken;
                reduced = true;
                break;
            }
        }
        if (reduced) continue;
        // branch on a maximum-degree vertex
        int best_v = -1, best_d = -1;
        for (std::uint32_t m = pool; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int d = std::popcount(g.adj[v] & pool);
            if (d > best_d) {
                best_d = d;
                best_v = v;
            }
        }
        const std::uint32_t bit = 1u << best_v;
        const int with_v = 1 + mis_rec(g, pool & ~(g.adj[best_v] | bit));
        const int without_v = mis_rec(g, pool & ~bit);
        return taken + (with_v > without_v ? with_v : without_v);
    }
}

inline void matching_rec(const SmallGraph& g, std::uint32_t pool, int cur, int& best) {
    for (std::uint32_t m = pool; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (!(g.adj[v] & pool)) pool &= ~(1u << v);
    }
    if (!pool) {
        if (cur > best) best = cur;
        return;
    }
    if (cur + std::popcount(pool) / 2 <= best) return;
    const int u = std::countr_zero(pool);
    for (std::uint32_t m = g.adj[u] & pool; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        matching_rec(g, pool & ~(1u << u) & ~(1u << v), cur + 1, best);
    }
    matching_rec(g, pool & ~(1u << u), cur, best);
}

}  // namespace detail

inline int independence_number(const SmallGraph& g) {
    return detail::mis_rec(g, g.vertex_mask());
}

inline int matching_number(const SmallGraph& g) {
    // greedy lower bound first
    int best = 0;
    std::uint32_t left = g.vertex_mask();
    for (int u = 0; u < g.n; ++u) {
        if (!((left >> u) & 1u)) continue;
        const std::uint32_t nb = g.adj[u] & left & ~(1u << u);
        if (nb) {
            left &= ~(1u << u) & ~(1u << std::countr_zero(nb));
            ++best;
        }
    }
    detail::matching_rec(g, g.vertex_mask(), 0, best);
    return best;
}

inline int degeneracy(const SmallGraph& g) {
    std::uint32_t pool = g.vertex_mask();
    int degen = 0;
    while (pool) {
        int best_v = -1, best_d = kMaxVertices + 1;
        for (std::uint32_t m = pool; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int d = std::popcount(g.adj[v] & pool);
            if (d < best_d) {
                best_d = d;
                best_v = v;
            }
        }
        if (best_d > degen) degen = best_d;
        pool &= ~(1u << best_v);
    }
    return degen;
}

inline GraphMetrics metrics(const SmallGraph& g) {
    const int a = independence_number(g);
    return {a, matching_number(g), g.n - a, degeneracy(g), g.edge_count()};
}

}  // namespace hexact
