#pragma once

// Small undirected graphs on at most 32 vertices, stored as one adjacency
// bitmask per vertex.  Everything is a value type; all operations are pure.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexact {

inline constexpr int kMaxVertices = 32;

struct SmallGraph {
    int n = 1;
    std::array<std::uint32_t, kMaxVertices> adj{};

    std::uint32_t vertex_mask() const {
        return n == 32 ? 0xffffffffu : ((1u << n) - 1u);
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
    }
    int degree(int v) const { return std::popcount(adj[v]); }
    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

inline void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Structural sanity: order in range, symmetric, loop-free, no bits >= n.
inline bool well_formed(const SmallGraph& g) {
    if (g.n < 1 || g.n > kMaxVertices) return false;
    const std::uint32_t mask = g.vertex_mask();
    for (int v = 0; v < kMaxVertices; ++v) {
        if (v >= g.n) {
            if (g.adj[v] != 0) return false;
            continue;
        }
        if (g.adj[v] & ~mask) return false;
        if ((g.adj[v] >> v) & 1u) return false;
        for (int u = v + 1; u < g.n; ++u)
            if (g.has_edge(v, u) != g.has_edge(u, v)) return false;
    }
    return true;
}

// ---- builders ----

inline SmallGraph make_empty(int n) {
    require(n >= 1 && n <= kMaxVertices, "make_empty: order out of range");
    SmallGraph g;
    g.n = n;
    return g;
}

inline SmallGraph make_complete(int n) {
    SmallGraph g = make_empty(n);
    const std::uint32_t mask = g.vertex_mask();
    for (int v = 0; v < n; ++v) g.adj[v] = mask & ~(1u << v);
    return g;
}

inline SmallGraph make_path(int n) {
    SmallGraph g = make_empty(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline SmallGraph make_cycle(int n) {
    require(n >= 3, "make_cycle: need n >= 3");
    SmallGraph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline SmallGraph make_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "make_complete_bipartite: sides must be positive");
    SmallGraph g = make_empty(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline SmallGraph complement(const SmallGraph& g) {
    SmallGraph c = make_empty(g.n);
    const std::uint32_t mask = g.vertex_mask();
    for (int v = 0; v < g.n; ++v) c.adj[v] = mask & ~g.adj[v] & ~(1u << v);
    return c;
}

inline SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
    require(a.n + b.n <= kMaxVertices, "disjoint_union: order exceeds 32");
    SmallGraph g = make_empty(a.n + b.n);
    for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = b.adj[v] << a.n;
    return g;
}

inline SmallGraph copies(const SmallGraph& g, int t) {
    require(t >= 1, "copies: need t >= 1");
    SmallGraph out = g;
    for (int i = 1; i < t; ++i) out = disjoint_union(out, g);
    return out;
}

inline SmallGraph join(const SmallGraph& a, const SmallGraph& b) {
    SmallGraph g = disjoint_union(a, b);
    for (int u = 0; u < a.n; ++u)
        for (int v = a.n; v < g.n; ++v) g.add_edge(u, v);
    return g;
}

// One extra vertex, adjacent to the vertices of `neighbors`.
inline SmallGraph add_vertex(const SmallGraph& g, std::uint32_t neighbors) {
    require(g.n < kMaxVertices, "add_vertex: order exceeds 32");
    SmallGraph out = g;
    const int v = g.n;
    out.n = g.n + 1;
    out.adj[v] = neighbors & g.vertex_mask();
    for (std::uint32_t m = out.adj[v]; m; m &= m - 1)
        out.adj[std::countr_zero(m)] |= 1u << v;
    return out;
}

// Induced subgraph on the vertices of `subset`, relabeled in ascending order.
inline SmallGraph induced_subgraph(const SmallGraph& g, std::uint32_t subset) {
    subset &= g.vertex_mask();
    require(subset != 0, "induced_subgraph: empty vertex set");
    int verts[kMaxVertices];
    int k = 0;
    for (std::uint32_t m = subset; m; m &= m - 1) verts[k++] = std::countr_zero(m);
    SmallGraph s = make_empty(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(verts[i], verts[j])) s.add_edge(i, j);
    return s;
}

inline SmallGraph delete_vertex(const SmallGraph& g, int v) {
    require(g.n >= 2, "delete_vertex: graph has one vertex");
    return induced_subgraph(g, g.vertex_mask() & ~(1u << v));
}

inline bool is_connected(const SmallGraph& g) {
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m; m &= m - 1)
            next |= g.adj[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

// Vertices reachable from src without leaving `allowed` (src must be in it).
inline std::uint32_t reachable(const SmallGraph& g, int src, std::uint32_t allowed) {
    std::uint32_t seen = 1u << src, frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m; m &= m - 1)
            next |= g.adj[std::countr_zero(m)];
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

// ---- graph6 ----
//
// Standard one-byte-header format, restricted to 1 <= n <= 32: byte n+63,
// then the upper triangle in column-major order, packed into 6-bit groups
// (high bit first), each group offset by 63.

inline std::string encode_graph6(const SmallGraph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline SmallGraph decode_graph6(const std::string& s) {
    require(!s.empty(), "graph6: empty string");
    const int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
    require(n >= 1, "graph6: bad order byte");
    require(n <= kMaxVertices, "graph6: order exceeds 32");
    const int bits = n * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    require(s.size() == 1 + body, "graph6: wrong length for stated order");
    SmallGraph g = make_empty(n);
    std::size_t c = 1;
    int val = 0, avail = 0;
    auto next_bit = [&]() {
        if (avail == 0) {
            val = static_cast<int>(static_cast<unsigned char>(s[c++])) - 63;
            require(val >= 0 && val < 64, "graph6: byte out of range");
            avail = 6;
        }
        return (val >> --avail) & 1;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit()) g.add_edge(i, j);
    while (avail > 0) require(next_bit() == 0, "graph6: nonzero padding");
    return g;
}

}  // namespace hexact
