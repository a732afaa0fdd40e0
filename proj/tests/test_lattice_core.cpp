#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "latskel/enumerate.hpp"
#include "latskel/lattice.hpp"

#include "fixtures.hpp"

using namespace latskel;
using namespace fixtures;

TEST_CASE("singleton lattice") {
    FiniteLattice L = build_lattice(1, {});
    CHECK(L.size() == 1);
    CHECK(L.bottom == 0);
    CHECK(L.top == 0);
    CHECK(L.length() == 0);
}

TEST_CASE("B2 join and meet against brute force") {
    FiniteLattice L = build_lattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(L.join(1, 2) == 3);
    CHECK(L.meet(1, 2) == 0);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(L.join(a, b) == brute_join(L, a, b));
            CHECK(L.meet(a, b) == brute_meet(L, a, b));
        }
}

TEST_CASE("build errors") {
    // two maximal elements, no top
    CHECK_THROWS_AS(build_lattice(4, {{0, 1}, {0, 2}}), NoBounds);
    // cycle
    CHECK_THROWS_AS(build_lattice(2, {{0, 1}, {1, 0}}), CycleDetected);
    // hexagon with two incomparable joins for the atoms
    CHECK_THROWS_AS(
        build_lattice(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}),
        NotALattice);
    CHECK_THROWS_AS(build_lattice(0, {}), NoBounds);
}

TEST_CASE("covers equal the transitive reduction even for redundant input") {
    // same order given with a redundant transitive edge
    FiniteLattice a = build_lattice(3, {{0, 1}, {1, 2}});
    FiniteLattice b = build_lattice(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(a.covers == b.covers);
}

TEST_CASE("length") {
    CHECK(build_lattice(1, {}).length() == 0);
    CHECK(boolean(2).length() == 2);
    CHECK(chain(4).length() == 3);
    for (const FiniteLattice& L : {boolean(3), d5(), m3(), n5(), chain(6)})
        CHECK(L.length() == brute_length(L.poset));
}

TEST_CASE("atoms, join-irreducibles, upper ji") {
    FiniteLattice B2 = boolean(2);
    CHECK(atoms(B2).to_vector() == std::vector<int>{1, 2});
    CHECK(join_irreducibles(B2).to_vector() == std::vector<int>{1, 2});
    CHECK(upper_ji(B2).none());

    FiniteLattice C4 = chain(4);
    CHECK(join_irreducibles(C4).to_vector() == std::vector<int>{1, 2, 3});
    CHECK(atoms(C4).to_vector() == std::vector<int>{1});
    CHECK(upper_ji(C4).to_vector() == std::vector<int>{2, 3});

    FiniteLattice D5 = d5();
    CHECK(atoms(D5).to_vector() == std::vector<int>{1, 2});
    CHECK(upper_ji(D5).to_vector() == std::vector<int>{4});

    // brute force: count lower covers directly
    for (const FiniteLattice& L : {B2, C4, D5, m3(), n5()})
        for (int x = 0; x < L.size(); ++x) {
            int lc = 0;
            for (int y = 0; y < L.size(); ++y)
                if (L.poset.covered_by(y, x)) ++lc;
            CHECK(join_irreducibles(L).test(x) == (x != L.bottom && lc == 1));
        }
}

TEST_CASE("ji poset and ji length") {
    CHECK(ji_length(boolean(3)) == 0);
    CHECK(ji_poset(boolean(3)).n == 3);
    CHECK(ji_length(d5()) == 1);
    CHECK(ji_length(chain(4)) == 2);
    CHECK(ji_poset(chain(4)).n == 3);
}

TEST_CASE("distributive and modular identities") {
    CHECK(is_distributive(boolean(2)));
    CHECK(is_modular(boolean(2)));
    CHECK_FALSE(is_distributive(m3()));
    CHECK(is_modular(m3()));
    CHECK_FALSE(is_distributive(n5()));
    CHECK_FALSE(is_modular(n5()));
}

TEST_CASE("identity checks agree with sublattice patterns over small lattices") {
    for (int n = 1; n <= 6; ++n)
        for (const FiniteLattice& L : enumerate_lattices(n)) {
            CHECK(is_modular(L) == !has_n5(L));
            CHECK(is_distributive(L) == (!has_n5(L) && !has_m3(L)));
            if (is_distributive(L)) CHECK(is_modular(L));
        }
}

TEST_CASE("isomorphism finds a relabeling and rejects mismatches") {
    FiniteLattice B2 = boolean(2);
    FiniteLattice B2r = build_lattice(4, {{3, 1}, {3, 2}, {1, 0}, {2, 0}});
    auto iso = are_isomorphic(B2, B2r);
    REQUIRE(iso.has_value());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(B2.leq(a, b) == B2r.leq((*iso)[a], (*iso)[b]));

    CHECK_FALSE(are_isomorphic(chain(4), B2).has_value());
    CHECK_FALSE(are_isomorphic(m3(), n5()).has_value());
}

TEST_CASE("isomorphism agrees with brute-force permutation search") {
    std::vector<FiniteLattice> ls;
    for (int n = 4; n <= 6; ++n)
        for (const FiniteLattice& L : enumerate_lattices(n)) ls.push_back(L);
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i; j < ls.size(); ++j) {
            bool fast = are_isomorphic(ls[i], ls[j]).has_value();
            CHECK(fast == brute_isomorphic(ls[i].poset, ls[j].poset));
        }
}

TEST_CASE("isomorphism is an equivalence") {
    std::vector<FiniteLattice> ls = enumerate_lattices(6);
    for (const FiniteLattice& L : ls) CHECK(are_isomorphic(L, L).has_value());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const FiniteLattice& a = ls[rng() % ls.size()];
        const FiniteLattice& b = ls[rng() % ls.size()];
        const FiniteLattice& c = ls[rng() % ls.size()];
        bool ab = are_isomorphic(a, b).has_value();
        CHECK(ab == are_isomorphic(b, a).has_value());
        if (ab && are_isomorphic(b, c).has_value())
            CHECK(are_isomorphic(a, c).has_value());
    }
}

TEST_CASE("downset lattice basics") {
    CHECK(are_isomorphic(downset_lattice(Poset::from_covers(2, {})), boolean(2)).has_value());
    CHECK(downset_lattice(Poset::from_covers(0, {})).size() == 1);
    FiniteLattice D = downset_lattice(Poset::from_covers(3, {{0, 2}, {1, 2}}));
    CHECK(D.size() == 5);
    CHECK(are_isomorphic(D, d5()).has_value());
    CHECK_THROWS_AS(downset_lattice(Poset::from_covers(13, {}), 4096), TooLarge);
}

TEST_CASE("downset lattice is distributive with the right ji poset") {
    for (int n = 0; n <= 5; ++n)
        for (const Poset& P : enumerate_posets(n)) {
            FiniteLattice D = downset_lattice(P);
            CHECK(is_distributive(D));
            CHECK(poset_isomorphism(ji_poset(D), P).has_value());
        }
}

TEST_CASE("interval") {
    FiniteLattice B2 = boolean(2);
    CHECK(are_isomorphic(interval(B2, B2.bottom, B2.top), B2).has_value());
    CHECK(interval(chain(4), 1, 2).size() == 2);
    FiniteLattice D5 = d5();
    CHECK(interval(D5, 3, 4).size() == 2);
    CHECK_THROWS_AS(interval(D5, 1, 2), NotComparable);
    std::vector<int> elems;
    interval(D5, 0, 3, &elems);
    CHECK(elems == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("lattice axioms hold exhaustively on generated lattices") {
    for (int n = 1; n <= 6; ++n)
        for (const FiniteLattice& L : enumerate_lattices(n))
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    CHECK(L.join(a, b) == L.join(b, a));
                    CHECK(L.meet(a, b) == L.meet(b, a));
                    CHECK(L.join(a, L.meet(a, b)) == a);
                    CHECK(L.meet(a, L.join(a, b)) == a);
                    for (int c = 0; c < n; ++c) {
                        CHECK(L.join(L.join(a, b), c) == L.join(a, L.join(b, c)));
                        CHECK(L.meet(L.meet(a, b), c) == L.meet(a, L.meet(b, c)));
                    }
                }
}

TEST_CASE("mobius function") {
    FiniteLattice B2 = boolean(2);
    MobiusTable mu(B2.poset);
    CHECK(mu(0, 0) == 1);
    CHECK(mu(B2.bottom, 1) == -1);
    CHECK(mu(B2.bottom, B2.top) == 1);
    MobiusTable muc(chain(3).poset);
    CHECK(muc(0, 2) == 0);
    // defining recursion: sums over half-open intervals vanish
    FiniteLattice B3 = boolean(3);
    MobiusTable mu3(B3.poset);
    for (int x = 0; x < B3.size(); ++x)
        for (int y = 0; y < B3.size(); ++y) {
            if (!B3.poset.lt(x, y)) continue;
            long long s = 0;
            for (int z = 0; z < B3.size(); ++z)
                if (B3.leq(x, z) && B3.leq(z, y)) s += mu3(x, z);
            CHECK(s == 0);
        }
}
