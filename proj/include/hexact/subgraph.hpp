#pragma once

// Subgraph containment (not necessarily induced): is there a monomorphism
// pattern -> host?  Backtracking over pattern vertices in decreasing-degree
// order, pruning candidates by degree and by adjacency to mapped neighbors.

#include <algorithm>

#include "hexact/graph.hpp"

namespace hexact {

namespace detail {

struct MonoSearch {
    const SmallGraph* host;
    const SmallGraph* pat;
    int order[kMaxVertices];           // pattern vertices in mapping order
    std::uint32_t base[kMaxVertices];  // host vertices of sufficient degree, per pattern vertex
    int map[kMaxVertices];
    std::uint32_t used = 0;

    bool dfs(int i) {
        if (i == pat->n) return true;
        const int p = order[i];
        std::uint32_t cand = base[p] & ~used;
        for (std::uint32_t m = pat->adj[p]; m && cand; m &= m - 1) {
            const int q = std::countr_zero(m);
            if (map[q] >= 0) cand &= host->adj[map[q]];
        }
        for (std::uint32_t m = cand; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            map[p] = v;
            used |= 1u << v;
            if (dfs(i + 1)) return true;
            used &= ~(1u << v);
        }
        map[p] = -1;
        return false;
    }
};

inline void mono_init(MonoSearch& s, const SmallGraph& host, const SmallGraph& pat) {
    s.host = &host;
    s.pat = &pat;
    for (int p = 0; p < pat.n; ++p) {
        s.order[p] = p;
        s.map[p] = -1;
        std::uint32_t b = 0;
        for (int v = 0; v < host.n; ++v)
            if (host.degree(v) >= pat.degree(p)) b |= 1u << v;
        s.base[p] = b;
    }
    std::sort(s.order, s.order + pat.n,
              [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
}

}  // namespace detail

inline bool contains_subgraph(const SmallGraph& host, const SmallGraph& pat) {
    require(pat.n <= host.n, "contains_subgraph: pattern larger than host");
    if (pat.edge_count() > host.edge_count()) return false;
    detail::MonoSearch s;
    detail::mono_init(s, host, pat);
    return s.dfs(0);
}

// Containment with a prescribed host vertex in the image.
inline bool contains_subgraph_using(const SmallGraph& host, const SmallGraph& pat,
                                    int host_vertex) {
    require(host_vertex >= 0 && host_vertex < host.n, "contains_subgraph_using: bad vertex");
    if (pat.n > host.n || pat.edge_count() > host.edge_count()) return false;
    detail::MonoSearch s;
    detail::mono_init(s, host, pat);
    for (int slot = 0; slot < pat.n; ++slot) {
        const int p = s.order[slot];
        if (!((s.base[p] >> host_vertex) & 1u)) continue;
        // move p to the front of the mapping order and pin it
        std::swap(s.order[0], s.order[slot]);
        s.map[p] = host_vertex;
        s.used = 1u << host_vertex;
        if (s.dfs(1)) return true;
        s.map[p] = -1;
        s.used = 0;
        std::swap(s.order[0], s.order[slot]);
    }
    return false;
}

}  // namespace hexact
