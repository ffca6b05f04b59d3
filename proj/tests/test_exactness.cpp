#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hexact/exactness.hpp"
#include "hexact/names.hpp"

#include "util.hpp"

using namespace hexact;

namespace {

SmallGraph g(const char* name) { return parse_graph(name); }

}  // namespace

TEST_CASE("pairwise verdicts on named graphs") {
    CHECK(compare(g("P4"), g("K3+K1")) == Comparison::Incomparable);
    CHECK(compare(g("2K2"), g("C4")) == Comparison::ProperSubgraph);
    CHECK(compare(g("C4"), g("2K2")) == Comparison::ProperSupergraph);
    CHECK(compare(g("P4"), g("P4")) == Comparison::Equal);
    CHECK(compare(g("P4"), g("C4")) == Comparison::ProperSubgraph);
    CHECK(compare(g("K1,3"), g("K3+K1")) == Comparison::Incomparable);
    CHECK(compare(g("E4"), g("K2+2K1")) == Comparison::ProperSubgraph);
    CHECK_THROWS_AS(compare(g("P3"), g("P4")), std::invalid_argument);
}

TEST_CASE("equal edge counts force Equal or Incomparable") {
    std::mt19937 rng(9301);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + trial % 4;
        const SmallGraph a = testutil::random_graph(rng, n, 0.5);
        const SmallGraph b = testutil::random_graph(rng, n, 0.5);
        if (a.edge_count() != b.edge_count()) continue;
        const Comparison c = compare(a, b);
        CHECK((c == Comparison::Equal || c == Comparison::Incomparable));
    }
}

TEST_CASE("verdicts dualize under complement") {
    std::mt19937 rng(9302);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + trial % 4;
        const SmallGraph a = testutil::random_graph(rng, n, 0.5);
        const SmallGraph b = testutil::random_graph(rng, n, 0.5);
        const Comparison c = compare(a, b);
        const Comparison cc = compare(complement(a), complement(b));
        switch (c) {
            case Comparison::Equal: CHECK(cc == Comparison::Equal); break;
            case Comparison::Incomparable: CHECK(cc == Comparison::Incomparable); break;
            case Comparison::ProperSubgraph: CHECK(cc == Comparison::ProperSupergraph); break;
            case Comparison::ProperSupergraph: CHECK(cc == Comparison::ProperSubgraph); break;
        }
    }
}

TEST_CASE("cached verdicts match direct comparison") {
    std::mt19937 rng(9303);
    const SmallGraph h = g("2K2");
    VerdictCache cache(h);
    for (int trial = 0; trial < 200; ++trial) {
        const SmallGraph host = testutil::random_graph(rng, 4 + trial % 5, 0.5);
        std::uint32_t subset = 0b1111u;
        for (int i = 0; i < 10; ++i) {
            subset = (subset * 2654435761u) % (1u << host.n);
            if (std::popcount(subset) != h.n) continue;
            CHECK(cache.verdict(host, subset) ==
                  compare(induced_subgraph(host, subset), h));
        }
    }
}

TEST_CASE("exactness on reference pairs") {
    CHECK(is_exact(g("C4"), g("P3")).exact);
    CHECK(is_exact(g("2K3"), g("2K2")).exact);
    CHECK(is_exact(g("K3,3"), g("C4")).exact);
    CHECK(is_exact(g("2K3"), g("K1,3")).exact);
    CHECK(is_exact(g("E5"), g("E3")).exact);
    CHECK(!is_exact(g("K5"), g("P3")).exact);
    CHECK(!is_exact(g("P5"), g("P3")).exact);
}

TEST_CASE("violation witnesses are the least violating subset") {
    const ExactnessReport rep = is_exact(g("K5"), g("P3"));
    REQUIRE(!rep.exact);
    CHECK(rep.violation->subset == 0b111u);
    CHECK(rep.violation->verdict == Comparison::ProperSupergraph);

    std::mt19937 rng(9304);
    const SmallGraph h = g("P3");
    VerdictCache cache(h);
    for (int trial = 0; trial < 200; ++trial) {
        const SmallGraph host = testutil::random_graph(rng, 5 + trial % 3, 0.4);
        const ExactnessReport r = is_exact(host, cache);
        if (r.exact) continue;
        for (std::uint32_t s = 0; s < r.violation->subset; ++s) {
            if (std::popcount(s) != h.n) continue;
            CHECK(legitimate(cache.verdict(host, s)));
        }
    }
}

TEST_CASE("incremental check agrees with the full scan") {
    std::mt19937 rng(9305);
    const SmallGraph h = g("2K2");
    VerdictCache cache(h);
    int disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 4 + trial % 4;
        SmallGraph host = testutil::random_graph(rng, n, 0.45);
        if (!is_exact(host, cache).exact) continue;
        const SmallGraph bigger = add_vertex(host, rng() % (1u << n));
        const bool full = is_exact(bigger, cache).exact;
        const bool inc = incremental_exact(bigger, cache, n);
        if (full != inc) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("incremental counterexamples from the references") {
    const SmallGraph seven = disjoint_union(g("2K3"), g("K1"));
    CHECK(!incremental_exact(seven, g("2K2"), 6));

    const SmallGraph wheel = add_vertex(g("C4"), 0b1111u);
    CHECK(!incremental_exact(wheel, g("P3"), 4));

    // Order k hosts degenerate to a single comparison.
    CHECK(incremental_exact(g("C4"), g("2K2"), 3) ==
          legitimate(compare(g("C4"), g("2K2"))));
    CHECK(incremental_exact(g("2K2"), g("2K2"), 3));
}

TEST_CASE("legitimate classes of the path on three vertices") {
    const std::vector<LegEntry> table = leg_table(g("P3"));
    CHECK(table.size() == 4);
    int equal = 0, inc = 0;
    for (const LegEntry& e : table) {
        if (e.verdict == Comparison::Equal) ++equal;
        if (e.verdict == Comparison::Incomparable) ++inc;
    }
    CHECK(equal == 1);
    CHECK(inc == 0);
}

TEST_CASE("legitimate classes of the two-edge matching") {
    const std::vector<SmallGraph> inc = incomparable_classes(g("2K2"));
    REQUIRE(inc.size() == 3);
    IsoClassSet expected;
    expected.insert(g("P3+K1"));
    expected.insert(g("K3+K1"));
    expected.insert(g("K1,3"));
    for (const SmallGraph& f : inc) CHECK(expected.contains(canonical_form(f)));
}

TEST_CASE("references whose class is the only legitimate one") {
    CHECK(incomparable_classes(g("K4-e")).empty());
    CHECK(incomparable_classes(g("E4")).empty());
    CHECK(incomparable_classes(g("K5")).empty());
    CHECK(incomparable_classes(g("co-K4-e")).empty());
}

TEST_CASE("legitimate buckets dualize class by class") {
    for (const char* name : {"P3", "2K2", "P4", "K1,3", "C4", "paw"}) {
        const SmallGraph h = g(name);
        const std::vector<LegEntry> table = leg_table(h);
        const std::vector<LegEntry> co_table = leg_table(complement(h));
        REQUIRE(table.size() == co_table.size());
        for (const LegEntry& e : table) {
            const CanonicalForm want = canonical_form(complement(e.graph));
            bool found = false;
            for (const LegEntry& ce : co_table)
                if (canonical_form(ce.graph) == want) {
                    found = true;
                    CHECK(ce.verdict == compare(complement(e.graph), complement(h)));
                    const bool dual_legit = legitimate(e.verdict);
                    CHECK(legitimate(ce.verdict) == dual_legit);
                }
            CHECK(found);
        }
    }
}

TEST_CASE("exactness dualizes under complement") {
    std::mt19937 rng(9306);
    for (int trial = 0; trial < 500; ++trial) {
        const int k = 2 + trial % 4;
        const int n = k + 1 + static_cast<int>(rng() % static_cast<unsigned>(9 - k));
        const SmallGraph host = testutil::random_graph(rng, n, 0.5);
        const SmallGraph h = testutil::random_graph(rng, k, 0.5);
        CHECK(is_exact(host, h).exact ==
              is_exact(complement(host), complement(h)).exact);
    }
}

TEST_CASE("every one-vertex deletion of an exact graph is exact") {
    // The sweep covers every exact host of order up to six against every
    // reference on three or four vertices; 27 such pairs exist.
    int exact_seen = 0;
    for (int k = 3; k <= 4; ++k)
        for (const SmallGraph& h : enumerate_iso_classes(k)) {
            VerdictCache cache(h);
            for (int n = k + 1; n <= 6; ++n)
                for (const SmallGraph& host : enumerate_iso_classes(n)) {
                    if (!is_exact(host, cache).exact) continue;
                    ++exact_seen;
                    for (int v = 0; v < host.n; ++v)
                        CHECK(is_exact(delete_vertex(host, v), cache).exact);
                }
        }
    CHECK(exact_seen == 27);
}
