#pragma once

// Linear-forest extraction from graphs with no path on k vertices.
//
// Repeatedly peeling a longest path partitions V(G) into paths of
// non-increasing order.  Picking both endpoints of each peeled path (or the
// sole vertex of a singleton) yields a set inducing components of order at
// most 2, of size at least 2 ceil(n / (k-1)) - epsilon where epsilon is 1
// exactly when n = 1 (mod k-1).

#include <bit>
#include <cstdint>
#include <vector>

#include "hexact/paths.hpp"

namespace hexact {

// Longest-path peeling of the whole vertex set, greedy on the residual graph.
inline std::vector<std::vector<int>> peel_paths(const SmallGraph& g) {
    std::vector<std::vector<int>> out;
    std::uint32_t avail = g.vertex_mask();
    while (avail != 0) {
        std::vector<int> p = longest_path_in(g, avail);
        for (int v : p) avail &= ~(1u << v);
        out.push_back(std::move(p));
    }
    return out;
}

struct ForestCertificate {
    int host_order = 0;
    int k = 0;
    std::uint32_t selected = 0;
    std::vector<std::vector<int>> paths;
    std::vector<std::uint32_t> components;
    int epsilon = 0;
    bool bound_met = false;
    bool components_ok = false;
};

inline ForestCertificate extract_linear_forest(const SmallGraph& g, int k) {
    require(k >= 5, "extract_linear_forest: need k >= 5");
    require(g.n >= k, "extract_linear_forest: host smaller than k");
    require(longest_path_order(g) < k, "extract_linear_forest: host has a path on k vertices");

    ForestCertificate cert;
    cert.host_order = g.n;
    cert.k = k;
    cert.paths = peel_paths(g);
    for (const std::vector<int>& p : cert.paths) {
        cert.selected |= 1u << p.front();
        cert.selected |= 1u << p.back();
    }

    std::uint32_t left = cert.selected;
    cert.components_ok = true;
    while (left != 0) {
        const int v = std::countr_zero(left);
        const std::uint32_t comp = reachable(g, v, cert.selected);
        cert.components.push_back(comp);
        if (std::popcount(comp) > 2) cert.components_ok = false;
        left &= ~comp;
    }

    cert.epsilon = (g.n % (k - 1) == 1) ? 1 : 0;
    const int target = 2 * ((g.n + k - 2) / (k - 1)) - cert.epsilon;
    cert.bound_met = std::popcount(cert.selected) >= target;
    return cert;
}

}  // namespace hexact
