#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hexact/names.hpp"
#include "hexact/ramsey.hpp"
#include "hexact/search.hpp"

#include "util.hpp"

using namespace hexact;

namespace {

SmallGraph g(const char* name) { return parse_graph(name); }

bool has_comparable_subset(const SmallGraph& host, const SmallGraph& h) {
    for (std::uint32_t s = 0; s < (1u << host.n); ++s) {
        if (std::popcount(s) != h.n) continue;
        if (compare(induced_subgraph(host, s), h) != Comparison::Incomparable) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("one-edge extension families") {
    const FamilySet u_p3 = u_set(g("P3"));
    REQUIRE(u_p3.members.size() == 1);
    CHECK(is_isomorphic(u_p3.members.front(), g("K3")));

    const FamilySet u_m = u_set(g("2K2"));
    REQUIRE(u_m.members.size() == 1);
    CHECK(is_isomorphic(u_m.members.front(), g("P4")));

    const FamilySet u_e3 = u_set(g("E3"));
    REQUIRE(u_e3.members.size() == 1);
    CHECK(is_isomorphic(u_e3.members.front(), g("K2+K1")));

    const FamilySet u_c4 = u_set(g("C4"));
    REQUIRE(u_c4.members.size() == 1);
    CHECK(is_isomorphic(u_c4.members.front(), g("K4-e")));

    CHECK(u_set(g("P4")).members.size() == 2);
    CHECK_THROWS_AS(u_set(g("K4")), std::invalid_argument);
    CHECK_THROWS_AS(u_set(g("K2")), std::invalid_argument);
}

TEST_CASE("family members all have one edge more than the base") {
    for (const char* name : {"P3", "P4", "C4", "K1,3", "2K2", "paw", "K4-e"}) {
        const SmallGraph h = g(name);
        const FamilySet fam = u_set(h);
        CHECK(!fam.members.empty());
        for (const SmallGraph& m : fam.members) {
            CHECK(m.n == h.n);
            CHECK(m.edge_count() == h.edge_count() + 1);
            CHECK(contains_subgraph(m, h));
        }
    }
}

TEST_CASE("tiny Ramsey values") {
    CHECK(ramsey(g("K2"), g("K2")).value == 2);
    CHECK(ramsey(g("P3"), g("K2+K1")).value == 3);
    CHECK(ramsey(g("K3"), g("K3")).value == 6);
    CHECK(ramsey(g("P4"), g("P4")).value == 5);
    CHECK(ramsey(g("C4"), g("C4")).value == 6);
    CHECK(ramsey(g("K3"), g("K4")).value == 9);
}

TEST_CASE("matching versus clique closed form") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 2; m <= 4; ++m) {
            const SmallGraph a = copies(make_complete(2), n);
            const RamseyResult r = ramsey(a, make_complete(m));
            REQUIRE(r.established);
            CHECK(r.value == 2 * n + m - 2);
        }
    }
}

TEST_CASE("results are symmetric in the two colors") {
    for (const auto& [a, b] : {std::pair{"K3", "P4"}, {"2K2", "K4"}, {"K1,3", "K3"}}) {
        CHECK(ramsey(g(a), g(b)).value == ramsey(g(b), g(a)).value);
    }
}

TEST_CASE("lower witnesses pass their avoidance checks") {
    for (const auto& [a, b] :
         {std::pair{"K3", "K3"}, {"2K2", "K4"}, {"P4", "P4"}, {"K1,3", "K3"}}) {
        const RamseyResult r = ramsey(g(a), g(b));
        REQUIRE(r.established);
        REQUIRE(r.lower_witness.has_value());
        CHECK(r.lower_witness->n == r.value - 1);
        CHECK(!contains_subgraph(*r.lower_witness, g(a)));
        CHECK(!contains_subgraph(complement(*r.lower_witness), g(b)));
    }
}

TEST_CASE("the least n forcing a comparable subset equals the Ramsey number") {
    for (int k = 3; k <= 4; ++k) {
        for (const SmallGraph& h : enumerate_iso_classes(k)) {
            const int via_def = g_direct(h);
            const RamseyResult r = ramsey(h, complement(h));
            REQUIRE(r.established);
            CHECK(via_def == r.value);
            CHECK(via_def == ramsey(complement(h), h).value);
            CHECK(via_def == g_direct(complement(h)));
        }
    }
}

TEST_CASE("reference g values") {
    CHECK(g_direct(g("P3")) == 3);
    CHECK(g_direct(g("P4")) == 5);
    CHECK(g_direct(g("C4")) == 5);
    CHECK(g_direct(g("K1,3")) == 7);
    CHECK(g_direct(g("K4")) == 4);
    CHECK(g_direct(g("E3")) == 3);
    CHECK(g_direct(g("K4-e")) == 4);
    CHECK(g_direct(g("P3+K1")) == 5);
}

TEST_CASE("graphs at the threshold contain comparable subsets for both references") {
    std::mt19937 rng(4401);
    for (const char* name : {"P3", "2K2", "C4", "P4", "K1,3"}) {
        const SmallGraph h = g(name);
        const int threshold = g_direct(h);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = threshold + trial % 3;
            if (n > 9) continue;
            const SmallGraph host = testutil::random_graph(rng, n, 0.1 + 0.1 * (trial % 8));
            CHECK(has_comparable_subset(host, h));
            CHECK(has_comparable_subset(host, complement(h)));
        }
    }
}

TEST_CASE("the largest all-incomparable order sits one below the threshold") {
    for (const char* name : {"C4", "2K2", "P4", "K1,3"}) {
        const SmallGraph h = g(name);
        const SearchOutcome out = search_h(h);
        REQUIRE(out.kind == OutcomeKind::Exact);
        CHECK(out.n == g_direct(h) - 1);
        for (const SmallGraph& w : out.witnesses.sorted()) {
            CHECK(!has_comparable_subset(w, h));
        }
    }
}

TEST_CASE("cliques against references without isolated vertices") {
    // R(K_k, H) is at least k + |V(H)| - 2 whenever H has no isolated vertex.
    for (const auto& [k, name] : {std::pair{3, "K2"}, {3, "P3"}, {3, "K3"}, {3, "2K2"},
                                  {3, "P4"}, {3, "C4"}, {3, "K1,3"}, {4, "K2"}, {4, "P3"},
                                  {4, "2K2"}, {4, "P4"}}) {
        const SmallGraph h = g(name);
        const RamseyResult r = ramsey(make_complete(k), h);
        REQUIRE(r.established);
        CHECK(r.value >= k + h.n - 2);
    }
}

TEST_CASE("family Ramsey values recover the extremal orders") {
    const RamseyResult p3 = family_ramsey(u_set(g("P3")), u_set(g("co-P3")));
    REQUIRE(p3.established);
    CHECK(p3.value == 5);

    const RamseyResult m = family_ramsey(u_set(g("2K2")), u_set(g("C4")));
    REQUIRE(m.established);
    CHECK(m.value == 7);
}

TEST_CASE("family searches check membership against every member") {
    const FamilySet pair{4, {g("P4"), g("K1,3")}};
    const FamilySet single{4, {g("K4")}};
    const RamseyResult r = family_ramsey(pair, single);
    REQUIRE(r.established);
    // A graph is bad once ANY member embeds, so the value cannot exceed the
    // single-member numbers.
    CHECK(r.value <= ramsey(g("P4"), g("K4")).value);
    CHECK(r.value <= ramsey(g("K1,3"), g("K4")).value);
}

TEST_CASE("family preconditions") {
    CHECK_THROWS_AS(family_ramsey(FamilySet{3, {}}, u_set(g("P3"))),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_ramsey(FamilySet{4, {g("P4"), g("P3")}}, u_set(g("P3"))),
                    std::invalid_argument);
}

TEST_CASE("budget trips leave an honest lower bound") {
    SearchBudget tight;
    tight.max_n = 4;
    const RamseyResult r = ramsey(g("K3"), g("K3"), tight);
    CHECK(!r.established);
    CHECK(r.value == 5);
    REQUIRE(r.lower_witness.has_value());
    CHECK(!contains_subgraph(*r.lower_witness, g("K3")));
    CHECK(!contains_subgraph(complement(*r.lower_witness), g("K3")));
}

TEST_CASE("lower bounds for the extremal order from clique Ramsey numbers") {
    // f(H) >= R(H, K_alpha) - 1; tight for the star and loose for the cycle.
    const RamseyResult star = ramsey(g("K1,3"), g("K3"));
    REQUIRE(star.established);
    CHECK(star.value == 7);
    CHECK(search_f(g("K1,3")).n >= star.value - 1);

    const RamseyResult cyc = ramsey(g("C4"), g("K2"));
    REQUIRE(cyc.established);
    CHECK(search_f(g("C4")).n >= cyc.value - 1);
}
