#pragma once

// Ramsey numbers by exhaustive augmentation over the good graphs: G is good
// for (A, B) when G contains no member of A and its complement contains no
// member of B, both as not-necessarily-induced subgraphs.  Goodness is closed
// under induced subgraphs, so the level engine applies; the first empty level
// is the Ramsey number.  Extensions are tested incrementally: a new copy of a
// forbidden subgraph must use the new vertex.

#include <optional>
#include <vector>

#include "hexact/exactness.hpp"
#include "hexact/levels.hpp"
#include "hexact/search.hpp"

namespace hexact {

struct FamilySet {
    int order = 1;
    std::vector<SmallGraph> members;
};

inline FamilySet family_of(const SmallGraph& g) { return {g.n, {g}}; }

// All graphs on |H| vertices with one edge more than H that contain H.
inline FamilySet u_set(const SmallGraph& h) {
    const int k = h.n;
    require(h.edge_count() < k * (k - 1) / 2, "u_set: reference is complete");
    const int target = h.edge_count() + 1;
    FamilySet fam{k, {}};
    for (const SmallGraph& f : enumerate_iso_classes(k))
        if (f.edge_count() == target && contains_subgraph(f, h))
            fam.members.push_back(f);
    return fam;
}

namespace detail {

inline void validate_family(const FamilySet& fam, const char* who) {
    require(!fam.members.empty(), "family_ramsey: empty family");
    for (const SmallGraph& m : fam.members)
        require(m.n == fam.order, who);
}

inline bool family_in(const SmallGraph& g, const FamilySet& fam) {
    if (fam.order > g.n) return false;
    const int eg = g.edge_count();
    for (const SmallGraph& m : fam.members)
        if (m.edge_count() <= eg && contains_subgraph(g, m)) return true;
    return false;
}

inline bool family_in_using(const SmallGraph& g, const FamilySet& fam, int v) {
    if (fam.order > g.n) return false;
    for (const SmallGraph& m : fam.members)
        if (contains_subgraph_using(g, m, v)) return true;
    return false;
}

}  // namespace detail

struct RamseyResult {
    int value;         // the Ramsey number, or a certified lower bound
    bool established;  // false when the budget tripped first
    std::optional<SmallGraph> lower_witness;  // a good graph on value-1 vertices
    std::vector<LevelCensusRow> levels;
};

inline RamseyResult family_ramsey(const FamilySet& a, const FamilySet& b,
                                  const SearchBudget& budget = {}, int workers = 1,
                                  const LevelObserver& observer = {}) {
    detail::validate_family(a, "family_ramsey: first family has mixed orders");
    detail::validate_family(b, "family_ramsey: second family has mixed orders");
    require(workers >= 1, "family_ramsey: workers must be positive");

    const SmallGraph k1 = make_empty(1);
    if (detail::family_in(k1, a) || detail::family_in(complement(k1), b))
        return {1, true, std::nullopt, {}};

    IsoClassSet seed;
    seed.insert(k1);
    auto keep = [&a, &b](const SmallGraph& cand, int) {
        const int v = cand.n - 1;
        return !detail::family_in_using(cand, a, v) &&
               !detail::family_in_using(complement(cand), b, v);
    };
    auto run = detail::grow_levels(std::move(seed), 1, keep, budget, workers, observer);
    RamseyResult out;
    out.value = run.deepest + 1;
    out.established = run.closed;
    out.lower_witness = run.deepest_set.sorted().front();
    out.levels = std::move(run.census);
    return out;
}

inline RamseyResult ramsey(const SmallGraph& a, const SmallGraph& b,
                           const SearchBudget& budget = {}, int workers = 1,
                           const LevelObserver& observer = {}) {
    return family_ramsey(family_of(a), family_of(b), budget, workers, observer);
}

// Smallest n such that every graph on at least n vertices has an induced
// |H|-subset comparable with H.  Via the h-search: one more than the largest
// order where all such subsets can be kept incomparable.
inline int g_direct(const SmallGraph& h, const SearchBudget& budget = {},
                    int workers = 1) {
    require(h.n >= 2 && h.n <= 8, "g_direct: reference order out of range [2,8]");
    if (incomparable_classes(h).empty()) return h.n;
    const SearchOutcome out = search_h(h, budget, workers);
    if (out.kind != OutcomeKind::Exact)
        throw budget_exhausted("g_direct: h-search budget exhausted");
    return out.n + 1;
}

}  // namespace hexact
