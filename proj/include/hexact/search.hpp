#pragma once

// Extremal orders of exact families.
//
//   search_f: largest order of an H-exact graph.  Level |H| seeds with H and
//     everything incomparable to it; an empty level n+1 certifies the value n.
//     Complete and edgeless references are exact at every order.
//   search_h: largest order where every |H|-subset is incomparable with H.
//     References whose class admits no incomparable graph either error (order
//     at least 4) or degenerate to the vacuous value |H| - 1.
//   naive_f: same quantity as search_f by filtering the full class catalogue
//     at each order; only viable through order 8, used as an oracle.

#include <vector>

#include "hexact/exactness.hpp"
#include "hexact/levels.hpp"

namespace hexact {

enum class OutcomeKind { Exact, LowerBoundOnly, Infinite };

inline const char* to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Exact: return "Exact";
        case OutcomeKind::LowerBoundOnly: return "LowerBoundOnly";
        default: return "Infinite";
    }
}

struct SearchOutcome {
    OutcomeKind kind;
    int n;  // exact value, or the certified lower bound; 0 for Infinite
    IsoClassSet witnesses;
    std::vector<LevelCensusRow> levels;
};

inline SearchOutcome search_f(const SmallGraph& h, const SearchBudget& budget = {},
                              int workers = 1, const LevelObserver& observer = {}) {
    const int k = h.n;
    require(k >= 2 && k <= 8, "search_f: reference order out of range [2,8]");
    require(workers >= 1, "search_f: workers must be positive");
    if (h.edge_count() == 0 || h.edge_count() == k * (k - 1) / 2)
        return {OutcomeKind::Infinite, 0, {}, {}};

    IsoClassSet seed;
    for (const auto& e : leg_table(h))
        if (legitimate(e.verdict)) seed.insert(e.graph);

    std::vector<VerdictCache> caches(workers, VerdictCache(h));
    auto keep = [&caches](const SmallGraph& cand, int slot) {
        return incremental_exact(cand, caches[slot], cand.n - 1);
    };
    auto run = detail::grow_levels(std::move(seed), k, keep, budget, workers, observer);
    return {run.closed ? OutcomeKind::Exact : OutcomeKind::LowerBoundOnly, run.deepest,
            std::move(run.deepest_set), std::move(run.census)};
}

inline SearchOutcome search_h(const SmallGraph& h, const SearchBudget& budget = {},
                              int workers = 1, const LevelObserver& observer = {}) {
    const int k = h.n;
    require(k >= 2 && k <= 8, "search_h: reference order out of range [2,8]");
    require(workers >= 1, "search_h: workers must be positive");

    IsoClassSet seed;
    for (const SmallGraph& f : incomparable_classes(h)) seed.insert(f);
    if (seed.empty()) {
        // complete, edgeless, one edge short of complete, or a single edge:
        // every graph on k vertices is comparable with H
        require(k <= 3, "search_h: every class is comparable with the reference");
        return {OutcomeKind::Exact, k - 1, {}, {}};
    }

    std::vector<VerdictCache> caches(workers, VerdictCache(h));
    auto keep = [&caches](const SmallGraph& cand, int slot) {
        return !detail::first_violation(cand, caches[slot], cand.n - 1, false).has_value();
    };
    auto run = detail::grow_levels(std::move(seed), k, keep, budget, workers, observer);
    return {run.closed ? OutcomeKind::Exact : OutcomeKind::LowerBoundOnly, run.deepest,
            std::move(run.deepest_set), std::move(run.census)};
}

inline SearchOutcome naive_f(const SmallGraph& h, int n_max) {
    const int k = h.n;
    require(k >= 2 && k <= 8, "naive_f: reference order out of range [2,8]");
    require(n_max >= k && n_max <= 8, "naive_f: n_max out of range [|H|,8]");
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
            .count();
    };

    VerdictCache cache(h);
    SearchOutcome out{OutcomeKind::LowerBoundOnly, n_max, {}, {}};
    IsoClassSet prev;
    for (int n = k; n <= n_max; ++n) {
        IsoClassSet level;
        for (const SmallGraph& g : enumerate_iso_classes(n))
            if (is_exact(g, cache).exact) level.insert(g);
        out.levels.push_back({n, level.size(), elapsed()});
        if (level.empty()) {
            out.kind = OutcomeKind::Exact;
            out.n = n - 1;
            out.witnesses = std::move(prev);
            return out;
        }
        prev = std::move(level);
    }
    out.witnesses = std::move(prev);
    return out;
}

}  // namespace hexact
