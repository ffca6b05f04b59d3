#pragma once

// Level-by-level canonical augmentation over an induced-hereditary family:
// level n holds one canonical representative per isomorphism class of the
// n-vertex members, built by extending every (n-1)-vertex class with one new
// vertex over all neighborhoods.  Heredity makes this exhaustive, so an empty
// level certifies that the family has no larger member.
//
// Parents are split across worker threads; each worker deduplicates into a
// local set and the sets are merged afterwards, so level contents never
// depend on the schedule.

#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hexact/canonical.hpp"
#include "hexact/graph.hpp"

namespace hexact {

struct SearchBudget {
    int max_n = kMaxVertices;
    std::size_t max_classes_per_level = 1u << 20;
    long long time_limit_ms = 0;  // 0: unlimited
};

struct LevelCensusRow {
    int n;
    std::size_t classes;
    long long cumulative_time_ms;
};

class budget_exhausted : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

using LevelObserver = std::function<void(int, const IsoClassSet&)>;

namespace detail {

struct LevelRun {
    bool closed = false;  // a level came out empty: deepest is exact
    int deepest = 0;      // deepest completed nonempty level
    IsoClassSet deepest_set;
    std::vector<LevelCensusRow> census;
};

// keep(candidate, worker_slot) decides membership; the candidate's last
// vertex (index candidate.n - 1) is the newly added one.
template <typename Keep>
LevelRun grow_levels(IsoClassSet level, int order, Keep&& keep,
                     const SearchBudget& budget, int workers,
                     const LevelObserver& observer = {}) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
            .count();
    };
    auto out_of_time = [&] {
        return budget.time_limit_ms > 0 && elapsed() >= budget.time_limit_ms;
    };

    require(!level.empty(), "grow_levels: empty seed level");
    LevelRun run;
    run.census.push_back({order, level.size(), elapsed()});
    if (observer) observer(order, level);

    for (;;) {
        if (order >= budget.max_n || out_of_time()) break;  // budget: lower bound only

        std::vector<const SmallGraph*> parents;
        parents.reserve(level.size());
        for (const auto& kv : level) parents.push_back(&kv.second);

        const int nthreads =
            std::max(1, std::min<int>(workers, static_cast<int>(parents.size())));
        std::vector<IsoClassSet> local(nthreads);
        std::atomic<bool> stop{false};
        auto work = [&](int slot) {
            const std::uint32_t top = 1u << order;
            for (std::size_t i = slot; i < parents.size();
                 i += static_cast<std::size_t>(nthreads)) {
                if (stop.load(std::memory_order_relaxed)) return;
                if (out_of_time()) {
                    stop.store(true, std::memory_order_relaxed);
                    return;
                }
                for (std::uint32_t mask = 0; mask < top; ++mask) {
                    const SmallGraph cand = add_vertex(*parents[i], mask);
                    if (keep(cand, slot)) local[slot].insert(cand);
                }
            }
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        if (stop.load()) break;

        IsoClassSet next;
        for (auto& l : local) next.merge(std::move(l));
        if (next.size() > budget.max_classes_per_level) break;

        run.census.push_back({order + 1, next.size(), elapsed()});
        if (observer) observer(order + 1, next);
        if (next.empty()) {
            run.closed = true;  // `level` still holds the deepest nonempty set
            break;
        }
        ++order;
        level = std::move(next);
    }
    run.deepest = order;
    run.deepest_set = std::move(level);
    return run;
}

}  // namespace detail
}  // namespace hexact
