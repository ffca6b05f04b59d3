#pragma once

// Comparison of equal-order graphs under the subgraph relation, and the
// exactness predicate: G is H-exact when every induced subgraph on |H|
// vertices is either isomorphic to H or incomparable with it.
//
// Verdicts depend only on the isomorphism class of the induced subgraph, so
// repeated queries are served from a cache keyed by the labeled bit code of
// the subset (canonical form for orders too large to pack into 64 bits).

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hexact/canonical.hpp"
#include "hexact/graph.hpp"
#include "hexact/subgraph.hpp"

namespace hexact {

enum class Comparison { Equal, ProperSupergraph, ProperSubgraph, Incomparable };

inline const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::Equal: return "Equal";
        case Comparison::ProperSupergraph: return "ProperSupergraph";
        case Comparison::ProperSubgraph: return "ProperSubgraph";
        default: return "Incomparable";
    }
}

// Verdict for F against H.  Equal order and equal edge count reduce
// containment to isomorphism, so only one monomorphism test ever runs.
inline Comparison compare(const SmallGraph& f, const SmallGraph& h) {
    require(f.n == h.n, "compare: orders differ");
    const int ef = f.edge_count(), eh = h.edge_count();
    if (ef == eh)
        return is_isomorphic(f, h) ? Comparison::Equal : Comparison::Incomparable;
    if (ef > eh)
        return contains_subgraph(f, h) ? Comparison::ProperSupergraph
                                       : Comparison::Incomparable;
    return contains_subgraph(h, f) ? Comparison::ProperSubgraph
                                   : Comparison::Incomparable;
}

inline bool legitimate(Comparison c) {
    return c == Comparison::Equal || c == Comparison::Incomparable;
}

class VerdictCache {
  public:
    explicit VerdictCache(const SmallGraph& h) : h_(h), k_(h.n) {}

    int order() const { return k_; }
    const SmallGraph& reference() const { return h_; }

    // Verdict of the subgraph induced by `subset` (popcount k) against H.
    Comparison verdict(const SmallGraph& g, std::uint32_t subset) {
        if (k_ <= 11) {
            int verts[11];
            int c = 0;
            for (std::uint32_t m = subset; m; m &= m - 1)
                verts[c++] = std::countr_zero(m);
            std::uint64_t code = 0;
            int t = 0;
            for (int j = 1; j < k_; ++j)
                for (int i = 0; i < j; ++i, ++t)
                    if (g.has_edge(verts[i], verts[j])) code |= 1ull << t;
            auto it = by_code_.find(code);
            if (it != by_code_.end()) return it->second;
            const Comparison v = compare(induced_subgraph(g, subset), h_);
            by_code_.emplace(code, v);
            return v;
        }
        const auto lab = canonical_relabel(induced_subgraph(g, subset));
        auto it = by_key_.find(lab.key);
        if (it != by_key_.end()) return it->second;
        const Comparison v = compare(lab.graph, h_);
        by_key_.emplace(lab.key, v);
        return v;
    }

  private:
    SmallGraph h_;
    int k_;
    std::unordered_map<std::uint64_t, Comparison> by_code_;
    std::unordered_map<CanonicalForm, Comparison, CanonicalFormHash> by_key_;
};

struct ExactnessViolation {
    std::uint32_t subset;
    Comparison verdict;
};

struct ExactnessReport {
    bool exact;
    std::optional<ExactnessViolation> violation;
};

namespace detail {

// k-subsets of {0..n-1} in increasing numeric order (Gosper).
inline std::uint32_t first_subset(int k) { return k == 32 ? 0xffffffffu : ((1u << k) - 1u); }

inline bool next_subset(std::uint32_t& s, int n) {
    const std::uint32_t lo = s & -s;
    const std::uint32_t carry = s + lo;
    if (n < 32 && carry >= (1u << n)) return false;
    if (carry == 0) return false;
    s = carry | (((s ^ carry) / lo) >> 2);
    return true;
}

// First subset (in mask order) whose verdict is outside `allow`; subsets are
// restricted to those containing `through` when it is nonnegative.
inline std::optional<ExactnessViolation> first_violation(const SmallGraph& g,
                                                         VerdictCache& cache,
                                                         int through,
                                                         bool allow_equal) {
    const int k = cache.order();
    require(g.n >= k, "exactness: host smaller than the reference order");
    auto bad = [&](Comparison c) {
        return !(c == Comparison::Incomparable || (allow_equal && c == Comparison::Equal));
    };
    if (through < 0) {
        std::uint32_t s = first_subset(k);
        do {
            const Comparison c = cache.verdict(g, s);
            if (bad(c)) return ExactnessViolation{s, c};
        } while (next_subset(s, g.n));
        return std::nullopt;
    }
    const std::uint32_t vbit = 1u << through;
    const std::uint32_t low = vbit - 1u;
    if (k == 1) {
        const Comparison c = cache.verdict(g, vbit);
        if (bad(c)) return ExactnessViolation{vbit, c};
        return std::nullopt;
    }
    std::uint32_t s = first_subset(k - 1);
    do {
        const std::uint32_t full = ((s & low) | ((s & ~low) << 1)) | vbit;
        const Comparison c = cache.verdict(g, full);
        if (bad(c)) return ExactnessViolation{full, c};
    } while (next_subset(s, g.n - 1));
    return std::nullopt;
}

}  // namespace detail

inline ExactnessReport is_exact(const SmallGraph& g, VerdictCache& cache) {
    auto v = detail::first_violation(g, cache, -1, true);
    return {!v.has_value(), v};
}

inline ExactnessReport is_exact(const SmallGraph& g, const SmallGraph& h) {
    VerdictCache cache(h);
    return is_exact(g, cache);
}

// Exactness of g given that g minus its last-added vertex is already exact:
// only subsets through `new_vertex` need checking.
inline bool incremental_exact(const SmallGraph& g, VerdictCache& cache, int new_vertex) {
    return !detail::first_violation(g, cache, new_vertex, true).has_value();
}

inline bool incremental_exact(const SmallGraph& g, const SmallGraph& h, int new_vertex) {
    VerdictCache cache(h);
    return incremental_exact(g, cache, new_vertex);
}

// All isomorphism classes on k vertices, 1 <= k <= 8, by one-vertex
// augmentation with canonical deduplication.  Sorted by canonical key.
inline const std::vector<SmallGraph>& enumerate_iso_classes(int k) {
    require(k >= 1 && k <= 8, "enumerate_iso_classes: order out of range [1,8]");
    static std::mutex mu;
    static std::vector<std::vector<SmallGraph>> memo{{}, {make_empty(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= k) {
        const int n = static_cast<int>(memo.size());
        IsoClassSet next;
        for (const SmallGraph& parent : memo[n - 1])
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
                next.insert(add_vertex(parent, mask));
        memo.push_back(next.sorted());
    }
    return memo[k];
}

struct LegEntry {
    SmallGraph graph;
    Comparison verdict;
};

// Verdict of every class on |H| vertices against H, in canonical key order.
inline std::vector<LegEntry> leg_table(const SmallGraph& h) {
    std::vector<LegEntry> out;
    for (const SmallGraph& f : enumerate_iso_classes(h.n))
        out.push_back({f, compare(f, h)});
    return out;
}

inline std::vector<SmallGraph> incomparable_classes(const SmallGraph& h) {
    std::vector<SmallGraph> out;
    for (const auto& e : leg_table(h))
        if (e.verdict == Comparison::Incomparable) out.push_back(e.graph);
    return out;
}

}  // namespace hexact
