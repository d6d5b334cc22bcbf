#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "dicolor/format.hpp"
#include "dicolor/isomorphism.hpp"
#include "dicolor/tournament.hpp"
#include "dicolor/vertex_set.hpp"
#include "oracles.hpp"

using namespace dicolor;

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({0, 3, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(0));
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.lowest() == 0);

    std::vector<int> got(s.begin(), s.end());
    CHECK(got == std::vector<int>{0, 3, 5});

    VertexSet t = VertexSet::of({3, 7});
    CHECK((s | t) == VertexSet::of({0, 3, 5, 7}));
    CHECK((s & t) == VertexSet::of({3}));
    CHECK((s - t) == VertexSet::of({0, 5}));
    CHECK(VertexSet::of({0, 3}).subset_of(s));
    CHECK_FALSE(s.subset_of(t));
    CHECK(s.intersects(t));
    CHECK_FALSE(VertexSet::of({1}).intersects(s));
    CHECK(VertexSet::full(4) == VertexSet::of({0, 1, 2, 3}));
    CHECK(to_string(VertexSet::of({2, 4})) == "{2,4}");
    CHECK(VertexSet{0}.empty());
}

TEST_CASE("tournament construction and completeness") {
    std::mt19937_64 rng(0x7a11);
    for (int n = 1; n <= 16; ++n) {
        Tournament t = oracle::random_tournament(n, rng);
        int degsum = 0;
        for (int i = 0; i < n; ++i) {
            CHECK_FALSE(t.out(i).contains(i));
            CHECK((t.out(i) | t.in(i)) == (t.vertices() - VertexSet::single(i)));
            CHECK_FALSE(t.out(i).intersects(t.in(i)));
            degsum += t.out_degree(i);
        }
        CHECK(degsum == n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(t.arc(i, j) != t.arc(j, i));
    }
}

TEST_CASE("transitive tournament") {
    Tournament t1 = transitive_tournament(1);
    CHECK(t1.size() == 1);
    Tournament t3 = transitive_tournament(3);
    CHECK(t3.arc(0, 1));
    CHECK(t3.arc(0, 2));
    CHECK(t3.arc(1, 2));
    CHECK(transitive_tournament(32).size() == 32);
    CHECK_THROWS_AS(transitive_tournament(0), parameter_error);
    CHECK_THROWS_AS(transitive_tournament(33), parameter_error);
}

TEST_CASE("paley tournaments") {
    SECTION("order 3 is the directed triangle") {
        Tournament p3 = paley(3);
        CHECK(p3.arc(0, 1));
        CHECK(p3.arc(1, 2));
        CHECK(p3.arc(2, 0));
    }
    SECTION("difference set membership") {
        Tournament p7 = paley(7); // residues mod 7: {1,2,4}
        for (int i = 0; i < 7; ++i)
            for (int d : {1, 2, 4}) CHECK(p7.arc(i, (i + d) % 7));
        Tournament p11 = paley(11); // residues mod 11: {1,3,4,5,9}
        for (int i = 0; i < 11; ++i)
            for (int d : {1, 3, 4, 5, 9}) CHECK(p11.arc(i, (i + d) % 11));
        Tournament p19 = paley(19);
        for (int d : {1, 4, 5, 6, 7, 9, 11, 16, 17}) CHECK(p19.arc(0, d));
    }
    SECTION("regularity") {
        for (int n : {3, 7, 11, 19, 23, 31}) {
            Tournament p = paley(n);
            for (int v = 0; v < n; ++v) CHECK(p.out_degree(v) == (n - 1) / 2);
        }
    }
    SECTION("rejects bad orders") {
        CHECK_THROWS_AS(paley(2), parameter_error);
        CHECK_THROWS_AS(paley(9), parameter_error);   // not prime
        CHECK_THROWS_AS(paley(13), parameter_error);  // 1 mod 4
        CHECK_THROWS_AS(paley(43), parameter_error);  // above the 32-vertex cap
    }
    SECTION("arc reversal gives an isomorphic tournament") {
        for (int n : {3, 7, 11}) CHECK(canonical_form(reverse(paley(n))) == canonical_form(paley(n)));
        // explicit witness x -> -x works at every order, including 19
        for (int n : {3, 7, 11, 19, 23, 31}) {
            Permutation neg(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) neg[x] = (n - x) % n;
            CHECK(is_isomorphism(reverse(paley(n)), paley(n), neg));
        }
    }
}

TEST_CASE("x13") {
    Tournament x = x13();
    CHECK(x.size() == 13);
    CHECK(x.arc(0, 1));
    CHECK_FALSE(x.arc(1, 0));
    for (int i = 0; i < 13; ++i) {
        CHECK(x.out_degree(i) == 6);
        CHECK(x.in_degree(i) == 6);
        for (int d : {1, 2, 3, 5, 6, 9}) CHECK(x.arc(i, (i + d) % 13));
    }
}

TEST_CASE("seven-vertex constructors share the hub frame") {
    for (const Tournament& t : {paley7_hub_labelling(), tournament_w(), tournament_w0(), tournament_w1()}) {
        REQUIRE(t.size() == 7);
        for (int v : {1, 2, 3}) CHECK(t.arc(0, v));
        for (int v : {4, 5, 6}) CHECK(t.arc(v, 0));
        CHECK(t.arc(1, 2));
        CHECK(t.arc(2, 3));
        CHECK(t.arc(3, 1));
        CHECK(t.arc(4, 5));
        CHECK(t.arc(5, 6));
        CHECK(t.arc(6, 4));
    }
    // the hub labeling is the same tournament as the circulant, relabeled
    CHECK(canonical_form(paley7_hub_labelling()) == canonical_form(paley(7)));
    // and the four are pairwise non-isomorphic
    std::vector<Tournament> four{paley7_hub_labelling(), tournament_w(), tournament_w0(), tournament_w1()};
    for (std::size_t i = 0; i < four.size(); ++i)
        for (std::size_t j = i + 1; j < four.size(); ++j)
            CHECK_FALSE(isomorphic(four[i], four[j]));
}

TEST_CASE("blow-up of the order-7 circulant") {
    Tournament b = blowup_pal7();
    REQUIRE(b.size() == 19);
    SECTION("each blown vertex is a directed triangle") {
        for (int part = 1; part <= 6; ++part) {
            int v1 = 3 * part - 2, v2 = 3 * part - 1, v3 = 3 * part;
            CHECK(b.arc(v1, v2));
            CHECK(b.arc(v2, v3));
            CHECK(b.arc(v3, v1));
        }
    }
    SECTION("every representative choice contracts back to the base") {
        Tournament base = paley(7);
        std::array<int, 7> pick{};
        for (int code = 0; code < 729; ++code) { // one position in 0..2 per triangle
            int c = code;
            pick[0] = 0;
            for (int part = 1; part <= 6; ++part, c /= 3) pick[part] = 3 * part - 2 + c % 3;
            bool ok = true;
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    if (i != j && b.arc(pick[i], pick[j]) != base.arc(i, j)) ok = false;
            CHECK(ok);
        }
    }
}

TEST_CASE("induced subtournaments") {
    CHECK_THROWS_AS(induced(paley(7), VertexSet{0}), parameter_error);
    CHECK_THROWS_AS(induced(paley(7), VertexSet::of({0, 9})), parameter_error);

    Tournament tri = induced(paley7_hub_labelling(), VertexSet::of({1, 2, 3}));
    CHECK(tri.arc(0, 1));
    CHECK(tri.arc(1, 2));
    CHECK(tri.arc(2, 0));

    CHECK(induced(x13(), VertexSet::of({0, 1, 2, 3})) == transitive_tournament(4));

    Tournament p7 = paley(7);
    CHECK(induced(p7, p7.vertices()) == p7);
}

TEST_CASE("relabel and reverse") {
    std::mt19937_64 rng(0xbeef);
    Tournament t = oracle::random_tournament(9, rng);
    CHECK(relabel(t, identity_perm(9)) == t);
    CHECK(reverse(reverse(t)) == t);

    Permutation p{3, 1, 4, 0, 2, 8, 7, 6, 5};
    Tournament r = relabel(t, p);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (i != j) CHECK(r.arc(p[i], p[j]) == t.arc(i, j));
}

TEST_CASE("partial tournaments") {
    PartialTournament p = PartialTournament::empty(4);
    CHECK(p.undecided_count() == 6);
    CHECK_FALSE(p.complete());
    CHECK_THROWS_AS(p.to_tournament(), usage_error);

    p = add_arc(p, 2, 1);
    CHECK(p.decided(1, 2));
    CHECK(p.arc(2, 1));
    CHECK_FALSE(p.arc(1, 2));
    CHECK(p.undecided_count() == 5);
    CHECK_THROWS_AS(add_arc(p, 1, 2), usage_error);
    CHECK_THROWS_AS(add_arc(p, 2, 1), usage_error);
    CHECK_THROWS_AS(add_arc(p, 0, 0), parameter_error);
    CHECK_THROWS_AS(add_arc(p, 0, 4), parameter_error);

    SECTION("undecided pairs stay sorted and unique") {
        auto pairs = p.undecided_pairs();
        CHECK(pairs.size() == 5);
        CHECK(std::is_sorted(pairs.begin(), pairs.end()));
        CHECK(std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end());
        for (auto [i, j] : pairs) CHECK(i < j);
    }

    SECTION("orienting everything yields a tournament") {
        for (auto [i, j] : p.undecided_pairs()) p = add_arc(p, j, i);
        REQUIRE(p.complete());
        Tournament t = p.to_tournament();
        CHECK(t.arc(2, 1));
        CHECK(t.arc(3, 0));
    }

    SECTION("a complete tournament round-trips") {
        Tournament t = paley(7);
        PartialTournament full(t);
        CHECK(full.complete());
        CHECK(full.to_tournament() == t);
    }
}

TEST_CASE("disjoint parts") {
    PartialTournament p = PartialTournament::disjoint_parts(tournament_w1(), transitive_tournament(5));
    CHECK(p.size() == 12);
    CHECK(p.undecided_count() == 35);
    CHECK(p.arc(0, 1));       // W_1 arcs in place
    CHECK(p.arc(7, 8));       // shifted TT5 arcs
    CHECK(p.arc(7, 11));
    for (int i = 0; i < 7; ++i)
        for (int j = 7; j < 12; ++j) CHECK_FALSE(p.decided(i, j));
}

TEST_CASE("text format") {
    CHECK(to_text(transitive_tournament(3)) == "3:111");
    CHECK(to_text(transitive_tournament(1)) == "1:");
    CHECK(to_text(paley(3)) == "3:101");

    SECTION("round trip on random tournaments") {
        std::mt19937_64 rng(0xf0f0);
        for (int n = 1; n <= 16; ++n)
            for (int rep = 0; rep < 10; ++rep) {
                Tournament t = oracle::random_tournament(n, rng);
                CHECK(tournament_from_text(to_text(t)) == t);
            }
    }

    SECTION("round trip on random partials") {
        std::mt19937_64 rng(0x5151);
        for (int rep = 0; rep < 40; ++rep) {
            PartialTournament p = oracle::random_partial(7, 0.3, rng);
            CHECK(partial_from_text(to_text(p)) == p);
        }
    }

    SECTION("partial text shows undecided pairs") {
        PartialTournament p = PartialTournament::empty(3);
        p = add_arc(p, 1, 0);
        CHECK(to_text(p) == "3:0??");
        PartialTournament q = partial_from_text("3:0??");
        CHECK(q.arc(1, 0));
        CHECK_FALSE(q.decided(0, 2));
    }

    SECTION("rejects malformed text") {
        CHECK_THROWS_AS(tournament_from_text("3:11"), parameter_error);    // short
        CHECK_THROWS_AS(tournament_from_text("3:1111"), parameter_error);  // long
        CHECK_THROWS_AS(tournament_from_text("3:1?1"), parameter_error);   // '?' in a tournament
        CHECK_THROWS_AS(tournament_from_text("111"), parameter_error);     // missing header
        CHECK_THROWS_AS(tournament_from_text("0:"), parameter_error);
        CHECK_THROWS_AS(tournament_from_text("33:"), parameter_error);
        CHECK_THROWS_AS(tournament_from_text("3:abc"), parameter_error);
        CHECK_THROWS_AS(partial_from_text("3:1x?"), parameter_error);
    }
}
