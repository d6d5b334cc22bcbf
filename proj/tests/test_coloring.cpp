#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "dicolor/coloring.hpp"
#include "dicolor/isomorphism.hpp"
#include "dicolor/tournament.hpp"
#include "oracles.hpp"

using namespace dicolor;

TEST_CASE("valid_partition") {
    Tournament tt5 = transitive_tournament(5);
    CHECK(valid_partition(tt5, ColorPartition{{VertexSet::full(5)}}, 1));
    CHECK(valid_partition(tt5, ColorPartition{{VertexSet::of({0, 1}), VertexSet::of({2, 3, 4})}}, 2));

    Tournament cyc = paley(3);
    CHECK_FALSE(valid_partition(cyc, ColorPartition{{VertexSet::full(3)}}, 1));       // 3-cycle class
    CHECK_FALSE(valid_partition(cyc, ColorPartition{{VertexSet::of({0, 1})}}, 2));    // vertex 2 uncovered
    CHECK_FALSE(valid_partition(cyc, ColorPartition{{VertexSet::of({0, 1}), VertexSet::of({1, 2})}}, 2)); // overlap
    CHECK_FALSE(valid_partition(cyc, ColorPartition{{VertexSet::of({0, 1}), VertexSet{0}, VertexSet::of({2})}}, 3)); // empty class
    CHECK_FALSE(valid_partition(cyc, ColorPartition{{VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({2})}}, 2)); // too many classes
    CHECK_FALSE(valid_partition(cyc, ColorPartition{{VertexSet::full(3), VertexSet::of({3})}}, 2)); // out of range
}

TEST_CASE("k_colorable against brute force") {
    CHECK_THROWS_AS(k_colorable(paley(3), 0), parameter_error);

    SECTION("every tournament up to 7 vertices, k = 1..3") {
        for (int n = 1; n <= 7; ++n)
            for (const Tournament& t : enumerate_tournaments(n))
                for (int k = 1; k <= 3; ++k) {
                    auto w = k_colorable(t, k);
                    CHECK(w.has_value() == oracle::brute_k_colorable(t, k));
                    if (w) CHECK(valid_partition(t, *w, k));
                }
    }
    SECTION("random larger instances, with and without memo") {
        std::mt19937_64 rng(0xc0105);
        for (int rep = 0; rep < 25; ++rep) {
            Tournament t = oracle::random_tournament(10, rng);
            for (int k = 1; k <= 3; ++k) {
                auto w = k_colorable(t, k);
                auto wm = k_colorable(t, k, ColoringOptions{.memo = true});
                CHECK(w.has_value() == oracle::brute_k_colorable(t, k));
                CHECK(w.has_value() == wm.has_value());
                if (w) CHECK(valid_partition(t, *w, k));
                if (wm) CHECK(valid_partition(t, *wm, k));
            }
        }
    }
}

TEST_CASE("dichromatic numbers of named tournaments") {
    for (int k = 1; k <= 12; ++k) CHECK(dichromatic_number(transitive_tournament(k)) == 1);
    CHECK(dichromatic_number(paley(3)) == 2);
    CHECK(dichromatic_number(paley(7)) == 3);
    CHECK(dichromatic_number(tournament_w()) == 3);
    CHECK(dichromatic_number(tournament_w0()) == 3);
    CHECK(dichromatic_number(tournament_w1()) == 3);
    CHECK(dichromatic_number(paley7_hub_labelling()) == 3);
    CHECK(dichromatic_number(paley(11)) == 4);
    CHECK(dichromatic_number(paley(19), ColoringOptions{.memo = true}) == 4);

    SECTION("x13 is 4-chromatic, by counting") {
        Tournament t = x13();
        // no transitive 5-set, so three classes cover at most 12 of 13 vertices
        CHECK_FALSE(contains_tt(t, 5).has_value());
        CHECK_FALSE(k_colorable(t, 3).has_value());
        auto w = k_colorable(t, 4);
        REQUIRE(w.has_value());
        CHECK(valid_partition(t, *w, 4));
        CHECK(dichromatic_number(t) == 4);
    }
}

TEST_CASE("dichromatic number properties") {
    std::mt19937_64 rng(0xd1c4);
    for (int rep = 0; rep < 20; ++rep) {
        Tournament t = oracle::random_tournament(9, rng);
        int chi = dichromatic_number(t);
        CHECK(dichromatic_number(reverse(t)) == chi); // reversal preserves transitive sets
        for (int v = 0; v < t.size(); ++v) {
            int sub = chromatic_of_subset(t, t.vertices() - VertexSet::single(v));
            CHECK(sub <= chi);
            CHECK(sub >= chi - 1);
        }
    }
}

TEST_CASE("chromatic_of_subset") {
    CHECK(chromatic_of_subset(x13(), VertexSet::of({0, 1, 2, 3})) == 1);  // a TT4
    CHECK(chromatic_of_subset(paley(7), VertexSet::of({0, 1, 3})) == 2);  // a 3-cycle
    CHECK(chromatic_of_subset(paley(7), VertexSet::full(7)) == 3);

    std::mt19937_64 rng(0x50b5);
    for (int rep = 0; rep < 40; ++rep) {
        Tournament t = oracle::random_tournament(10, rng);
        VertexSet s(static_cast<std::uint32_t>(rng()) & 0x3ffu);
        if (s.empty()) continue;
        CHECK(chromatic_of_subset(t, s) == dichromatic_number(induced(t, s)));
    }
}

TEST_CASE("k_colorable_partial") {
    CHECK_THROWS_AS(k_colorable_partial(PartialTournament::empty(3), 0), parameter_error);

    SECTION("join of a 3-chromatic part and a transitive part needs only 3 classes") {
        PartialTournament root = PartialTournament::disjoint_parts(tournament_w1(), transitive_tournament(5));
        CHECK(k_colorable_partial(root, 3));
        CHECK_FALSE(k_colorable_partial(root, 2)); // the first part alone refutes 2
    }
    SECTION("complete partials reduce to the tournament test") {
        std::mt19937_64 rng(0xface);
        for (int rep = 0; rep < 30; ++rep) {
            Tournament t = oracle::random_tournament(8, rng);
            PartialTournament p(t);
            for (int k = 1; k <= 3; ++k)
                CHECK(k_colorable_partial(p, k) == k_colorable(t, k).has_value());
        }
    }
    SECTION("true exactly when some completion is k-colorable") {
        std::mt19937_64 rng(0xdead);
        int done = 0;
        while (done < 60) {
            PartialTournament p = oracle::random_partial(6, 0.3, rng);
            if (p.undecided_count() > 8) continue;
            ++done;
            for (int k = 1; k <= 3; ++k) {
                bool any = false;
                for (const Tournament& t : oracle::all_completions(p))
                    if (oracle::brute_k_colorable(t, k)) any = true;
                CHECK(k_colorable_partial(p, k) == any);
                CHECK(k_colorable_partial(p, k) == oracle::brute_k_colorable_partial(p, k));
            }
        }
    }
}
