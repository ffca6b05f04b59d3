#pragma once

// Canonical labeling.  The key is the lexicographically smallest upper-triangle
// adjacency bit string (column-major, so each new vertex appends one column)
// over all vertex orderings consistent with an iterated degree-refinement
// partition.  The partition and its cell order are isomorphism invariants, so
// equal keys <=> isomorphic graphs.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hexact/graph.hpp"

namespace hexact {

struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 8> words{};  // bit t of the stream at word t/64, bit 63-t%64

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull + f.n;
        for (std::uint64_t w : f.words) {
            h ^= w;
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }
};

struct CanonicalLabeling {
    CanonicalForm key;
    SmallGraph graph;  // the canonically relabeled representative
};

namespace detail {

// Iterated refinement by (color, sorted multiset of neighbor colors).
// Final color ids are ordered by signature, hence isomorphism-invariant.
inline int wl_colors(const SmallGraph& g, int color[kMaxVertices]) {
    const int n = g.n;
    for (int v = 0; v < n; ++v) color[v] = 0;
    int ncolors = 1;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            for (std::uint32_t m = g.adj[v]; m; m &= m - 1)
                sig[v].push_back(color[std::countr_zero(m)]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        int next[kMaxVertices];
        int c = 0;
        next[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (c + 1 == ncolors) break;
        ncolors = c + 1;
        for (int v = 0; v < n; ++v) color[v] = next[v];
        if (ncolors == n) break;
    }
    return ncolors;
}

struct CanonSearch {
    const SmallGraph* g = nullptr;
    int n = 0;
    std::uint32_t cell_of_pos[kMaxVertices];  // candidate mask per position
    std::uint32_t placed_mask = 0;
    int placed[kMaxVertices];
    std::uint32_t col[kMaxVertices];  // current column value per vertex
    std::uint32_t cur_cols[kMaxVertices];
    std::uint32_t best_cols[kMaxVertices];
    int best_perm[kMaxVertices];
    bool have_best = false;

    // Returns true if the best string was replaced somewhere in this subtree.
    bool dfs(int pos, bool tight) {
        if (pos == n) {
            if (have_best && tight) return false;  // identical string
            for (int p = 0; p < n; ++p) {
                best_cols[p] = cur_cols[p];
                best_perm[p] = placed[p];
            }
            have_best = true;
            return true;
        }
        std::uint32_t cand = cell_of_pos[pos] & ~placed_mask;
        std::uint32_t mincol = ~0u;
        for (std::uint32_t m = cand; m; m &= m - 1) {
            const std::uint32_t c = col[std::countr_zero(m)];
            if (c < mincol) mincol = c;
        }
        bool child_tight = false;
        if (have_best && tight) {
            if (mincol > best_cols[pos]) return false;
            child_tight = (mincol == best_cols[pos]);
        }
        cur_cols[pos] = mincol;

        // candidates achieving the minimum column, one per twin class
        int kept[kMaxVertices];
        int nkept = 0;
        for (std::uint32_t m = cand; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (col[v] != mincol) continue;
            bool dup = false;
            for (int i = 0; i < nkept && !dup; ++i) {
                const int u = kept[i];
                dup = (g->adj[u] & ~(1u << v)) == (g->adj[v] & ~(1u << u));
            }
            if (!dup) kept[nkept++] = v;
        }

        bool replaced = false;
        for (int i = 0; i < nkept; ++i) {
            const int v = kept[i];
            placed[pos] = v;
            placed_mask |= 1u << v;
            for (int u = 0; u < n; ++u)
                col[u] = (col[u] << 1) | ((g->adj[u] >> v) & 1u);
            if (dfs(pos + 1, child_tight)) {
                replaced = true;
                child_tight = true;  // best now runs through this node
            }
            for (int u = 0; u < n; ++u) col[u] >>= 1;
            placed_mask &= ~(1u << v);
        }
        return replaced;
    }
};

}  // namespace detail

inline CanonicalLabeling canonical_relabel(const SmallGraph& g) {
    detail::CanonSearch s;
    s.g = &g;
    s.n = g.n;
    int color[kMaxVertices];
    detail::wl_colors(g, color);
    // positions are filled cell by cell, cells in color order
    {
        std::uint32_t cell_mask[kMaxVertices] = {};
        for (int v = 0; v < g.n; ++v) cell_mask[color[v]] |= 1u << v;
        int pos = 0;
        for (int c = 0; c < g.n; ++c)
            for (int i = std::popcount(cell_mask[c]); i > 0; --i)
                s.cell_of_pos[pos++] = cell_mask[c];
    }
    for (int v = 0; v < g.n; ++v) s.col[v] = 0;
    s.dfs(0, true);

    CanonicalLabeling out;
    out.key.n = static_cast<std::uint8_t>(g.n);
    int t = 0;
    for (int p = 1; p < g.n; ++p)
        for (int b = p - 1; b >= 0; --b, ++t)
            if ((s.best_cols[p] >> b) & 1u)
                out.key.words[t >> 6] |= 1ull << (63 - (t & 63));
    out.graph = make_empty(g.n);
    for (int p = 0; p < g.n; ++p)
        for (int q = p + 1; q < g.n; ++q)
            if (g.has_edge(s.best_perm[p], s.best_perm[q])) out.graph.add_edge(p, q);
    return out;
}

inline CanonicalForm canonical_form(const SmallGraph& g) {
    return canonical_relabel(g).key;
}

inline bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    int da[kMaxVertices + 1] = {}, db[kMaxVertices + 1] = {};
    for (int v = 0; v < a.n; ++v) ++da[a.degree(v)];
    for (int v = 0; v < b.n; ++v) ++db[b.degree(v)];
    for (int d = 0; d <= kMaxVertices; ++d)
        if (da[d] != db[d]) return false;
    return canonical_form(a) == canonical_form(b);
}

// Set of isomorphism classes keyed by canonical form; stored representatives
// are canonical relabelings, so contents never depend on insertion order.
class IsoClassSet {
  public:
    bool insert(const SmallGraph& g) { return insert_labeled(canonical_relabel(g)); }
    bool insert_labeled(const CanonicalLabeling& lab) {
        return classes_.emplace(lab.key, lab.graph).second;
    }
    bool contains(const CanonicalForm& key) const { return classes_.count(key) != 0; }
    std::size_t size() const { return classes_.size(); }
    bool empty() const { return classes_.empty(); }

    void merge(IsoClassSet&& other) {
        for (auto& kv : other.classes_) classes_.insert(std::move(kv));
        other.classes_.clear();
    }

    // representatives in key order
    std::vector<SmallGraph> sorted() const {
        std::vector<const std::pair<const CanonicalForm, SmallGraph>*> ptrs;
        ptrs.reserve(classes_.size());
        for (const auto& kv : classes_) ptrs.push_back(&kv);
        std::sort(ptrs.begin(), ptrs.end(),
                  [](auto* x, auto* y) { return x->first < y->first; });
        std::vector<SmallGraph> out;
        out.reserve(ptrs.size());
        for (auto* p : ptrs) out.push_back(p->second);
        return out;
    }

    auto begin() const { return classes_.begin(); }
    auto end() const { return classes_.end(); }

  private:
    std::unordered_map<CanonicalForm, SmallGraph, CanonicalFormHash> classes_;
};

}  // namespace hexact
