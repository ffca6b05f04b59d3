#pragma once

// Longest simple path by depth-first search with a reachability bound.
// longest_path returns the lexicographically least vertex sequence among the
// maximum-order paths: candidates are tried in ascending label order, and the
// first maximum-length path found in that order is the least one.

#include <vector>

#include "hexact/graph.hpp"

namespace hexact {

namespace detail {

inline void lp_order_rec(const SmallGraph& g, int last, std::uint32_t visited,
                         int len, std::uint32_t allowed, int& best) {
    if (len > best) best = len;
    const std::uint32_t avail = allowed & ~visited;
    const std::uint32_t reach = reachable(g, last, avail);
    if (len + std::popcount(reach & avail) <= best) return;
    for (std::uint32_t m = g.adj[last] & avail; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        lp_order_rec(g, v, visited | (1u << v), len + 1, allowed, best);
    }
}

inline bool lp_find_rec(const SmallGraph& g, int last, std::uint32_t visited,
                        std::uint32_t allowed, int target, std::vector<int>& path) {
    if (static_cast<int>(path.size()) == target) return true;
    const std::uint32_t avail = allowed & ~visited;
    const std::uint32_t reach = reachable(g, last, avail);
    if (static_cast<int>(path.size()) + std::popcount(reach & avail) < target) return false;
    for (std::uint32_t m = g.adj[last] & avail; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        path.push_back(v);
        if (lp_find_rec(g, v, visited | (1u << v), allowed, target, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

// Order of a longest simple path inside the `allowed` vertex set.
inline int longest_path_order_in(const SmallGraph& g, std::uint32_t allowed) {
    allowed &= g.vertex_mask();
    int best = 0;
    for (std::uint32_t m = allowed; m; m &= m - 1) {
        const int s = std::countr_zero(m);
        detail::lp_order_rec(g, s, 1u << s, 1, allowed, best);
    }
    return best;
}

inline int longest_path_order(const SmallGraph& g) {
    return longest_path_order_in(g, g.vertex_mask());
}

inline std::vector<int> longest_path_in(const SmallGraph& g, std::uint32_t allowed) {
    allowed &= g.vertex_mask();
    const int target = longest_path_order_in(g, allowed);
    std::vector<int> path;
    if (target == 0) return path;
    path.reserve(target);
    for (std::uint32_t m = allowed; m; m &= m - 1) {
        const int s = std::countr_zero(m);
        path.push_back(s);
        if (detail::lp_find_rec(g, s, 1u << s, allowed, target, path)) return path;
        path.pop_back();
    }
    return path;  // unreachable: the first pass certified a path of this order
}

inline std::vector<int> longest_path(const SmallGraph& g) {
    return longest_path_in(g, g.vertex_mask());
}

}  // namespace hexact
