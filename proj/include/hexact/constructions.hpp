#pragma once

// Explicit extremal constructions, each paired with the reference graph it is
// exact for so the claim can be certified by is_exact directly.
//
//   vertex_transitive_union: G = tF, H = (F - v) union (t-1)F.  Requires all
//     one-vertex-deleted subgraphs of F to be isomorphic; every |H|-subset of
//     G then induces H itself.
//   alpha_construction:     G = (alpha(H) - 1) K_{k-1} for connected H.
//   matching_construction:  G = (k - mu(H) - 1) K_{k-1} for connected
//     triangle-free H.
//   path_extremal:          G = (ceil(k/2) - 1) K_{k-1} (+ K_1 for even k),
//     exact for P_k and of the conjectured-extremal order.
//   matching_extremal:      G = K_{2n-1} union E_{2n-3}, exact for nK_2,
//     n >= 4 (the order-3n witnesses below that are clique unions).
//
// Constructions whose order falls below |H| carry a vacuous flag: there is
// nothing to certify.

#include <string>
#include <vector>

#include "hexact/exactness.hpp"
#include "hexact/metrics.hpp"

namespace hexact {

struct Construction {
    std::string name;
    std::vector<int> params;
    SmallGraph graph;
    SmallGraph reference;
    bool vacuous = false;
};

inline Construction vertex_transitive_union(const SmallGraph& f, int t) {
    require(t >= 1, "vertex_transitive_union: need t >= 1");
    require(f.n >= 2, "vertex_transitive_union: base graph needs two vertices");
    require(f.n * t <= kMaxVertices, "vertex_transitive_union: order exceeds 32");
    const CanonicalForm d0 = canonical_form(delete_vertex(f, 0));
    for (int v = 1; v < f.n; ++v)
        require(canonical_form(delete_vertex(f, v)) == d0,
                "vertex_transitive_union: one-vertex-deleted subgraphs differ");
    SmallGraph h = delete_vertex(f, 0);
    for (int i = 1; i < t; ++i) h = disjoint_union(h, f);
    return {"vertex-transitive", {t}, copies(f, t), h, false};
}

inline Construction alpha_construction(const SmallGraph& h) {
    require(is_connected(h), "alpha_construction: reference must be connected");
    const int k = h.n;
    require(k >= 3, "alpha_construction: reference order below 3");
    const int count = independence_number(h) - 1;
    require(count >= 1, "alpha_construction: complete reference gives an empty union");
    require(count * (k - 1) <= kMaxVertices, "alpha_construction: order exceeds 32");
    SmallGraph g = copies(make_complete(k - 1), count);
    return {"alpha", {}, g, h, g.n < k};
}

inline Construction matching_construction(const SmallGraph& h) {
    require(is_connected(h), "matching_construction: reference must be connected");
    const int k = h.n;
    require(k < 3 || !contains_subgraph(h, make_complete(3)),
            "matching_construction: reference must be triangle-free");
    const int count = k - matching_number(h) - 1;
    require(count >= 1, "matching_construction: empty union");
    require(count * (k - 1) <= kMaxVertices, "matching_construction: order exceeds 32");
    SmallGraph g = copies(make_complete(k - 1), count);
    return {"matching", {}, g, h, g.n < k};
}

inline Construction path_extremal(int k) {
    require(k >= 5, "path_extremal: need k >= 5");
    const int count = (k + 1) / 2 - 1;
    const int order = count * (k - 1) + (k % 2 == 0 ? 1 : 0);
    require(order <= kMaxVertices, "path_extremal: order exceeds 32");
    SmallGraph g = copies(make_complete(k - 1), count);
    if (k % 2 == 0) g = disjoint_union(g, make_empty(1));
    return {"path-extremal", {k}, g, make_path(k), false};
}

inline Construction matching_extremal(int n) {
    require(n >= 4, "matching_extremal: need n >= 4 (clique unions cover n = 2, 3)");
    require(4 * n - 4 <= kMaxVertices, "matching_extremal: order exceeds 32");
    SmallGraph g = disjoint_union(make_complete(2 * n - 1), make_empty(2 * n - 3));
    return {"matching-extremal", {n}, g, copies(make_complete(2), n), false};
}

inline ExactnessReport certify(const Construction& c) {
    if (c.vacuous) return {true, std::nullopt};
    return is_exact(c.graph, c.reference);
}

// All r-regular graphs on n vertices, one canonical representative per class.
// Backtracking over the lowest deficient vertex with the neighborhood of
// vertex 0 pinned to {1..r}; dense regularities go through the complement.
inline std::vector<SmallGraph> enumerate_regular(int n, int r) {
    require(n >= 1 && n <= kMaxVertices, "enumerate_regular: order out of range");
    require(r >= 0 && r < n, "enumerate_regular: degree out of range");
    if ((n * r) % 2 == 1) return {};
    if (r == 0) return {make_empty(n)};
    if (2 * r > n - 1) {
        IsoClassSet flipped;
        for (const SmallGraph& g : enumerate_regular(n, n - 1 - r))
            flipped.insert(complement(g));
        return flipped.sorted();
    }

    struct Gen {
        int n, r;
        SmallGraph g;
        int deg[kMaxVertices] = {};
        IsoClassSet out;

        void rec(int prev_u, int floor) {
            int u = -1;
            for (int v = 0; v < n; ++v)
                if (deg[v] < r) {
                    u = v;
                    break;
                }
            if (u < 0) {
                out.insert(g);
                return;
            }
            if (u != prev_u) floor = u + 1;
            const int need = r - deg[u];
            int avail = 0;
            for (int v = floor; v < n; ++v)
                if (deg[v] < r && !g.has_edge(u, v)) ++avail;
            if (avail < need) return;
            for (int v = floor; v < n; ++v) {
                if (deg[v] >= r || g.has_edge(u, v)) continue;
                g.add_edge(u, v);
                ++deg[u];
                ++deg[v];
                rec(u, v + 1);
                --deg[u];
                --deg[v];
                g.remove_edge(u, v);
            }
        }
    };

    Gen gen;
    gen.n = n;
    gen.r = r;
    gen.g = make_empty(n);
    for (int v = 1; v <= r; ++v) {
        gen.g.add_edge(0, v);
        gen.deg[0]++;
        gen.deg[v]++;
    }
    gen.rec(0, 1);
    return gen.out.sorted();
}

}  // namespace hexact
