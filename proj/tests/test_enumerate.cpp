#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "latskel/enumerate.hpp"

#include "fixtures.hpp"

using namespace latskel;
using namespace fixtures;

namespace {

/// Independent oracle: all posets on n labeled elements by filtering every
/// relation matrix, deduplicated by exhaustive permutation isomorphism.
std::vector<Poset> brute_posets(int n) {
    std::vector<Poset> reps;
    int bits = n * n - n;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << bits); ++m) {
        std::vector<Bitset> up(n, Bitset(n));
        int k = 0;
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    up[i].set(i);
                    continue;
                }
                if (m >> k++ & 1) up[i].set(j);
            }
        Poset p;
        try {
            p = Poset::from_leq(up);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) continue;
        bool fresh = true;
        for (const Poset& q : reps)
            if (brute_isomorphic(p, q)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(p);
    }
    return reps;
}

} // namespace

TEST_CASE("poset counts match the brute-force oracle") {
    CHECK(enumerate_posets(1).size() == 1);
    CHECK(enumerate_posets(3).size() == 5);
    for (int n = 1; n <= 4; ++n)
        CHECK(enumerate_posets(n).size() == brute_posets(n).size());
    CHECK(enumerate_posets(5).size() == 63);
    CHECK_THROWS_AS(enumerate_posets(8), TooLarge);
}

TEST_CASE("generated posets are pairwise non-isomorphic and honest") {
    std::vector<Poset> ps = enumerate_posets(5);
    CHECK(ps.size() == 63);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(ps[i].n == 5);
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            CHECK_FALSE(poset_isomorphism(ps[i], ps[j]).has_value());
    }
}

TEST_CASE("lattice counts and cross-check against a direct poset filter") {
    std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15};
    for (int n = 1; n <= 6; ++n) {
        std::vector<FiniteLattice> ls = enumerate_lattices(n);
        CHECK(ls.size() == expected[n - 1]);
        // Direct filter of enumerate_posets output to lattice axioms.
        std::size_t direct = 0;
        for (const Poset& p : enumerate_posets(n)) {
            try {
                detail::lattice_from_poset(p);
                ++direct;
            } catch (const Error&) {
            }
        }
        CHECK(direct == ls.size());
    }
    CHECK_THROWS_AS(enumerate_lattices(9), TooLarge);
}

TEST_CASE("five-element lattices include M3 and N5") {
    bool saw_m3 = false, saw_n5 = false;
    for (const FiniteLattice& L : enumerate_lattices(5)) {
        if (are_isomorphic(L, m3()).has_value()) saw_m3 = true;
        if (are_isomorphic(L, n5()).has_value()) saw_n5 = true;
    }
    CHECK(saw_m3);
    CHECK(saw_n5);
}

TEST_CASE("every enumerated lattice passes full validation") {
    for (int n = 1; n <= 7; ++n)
        for (const FiniteLattice& L : enumerate_lattices(n)) {
            FiniteLattice rebuilt = build_lattice(n, L.covers);
            CHECK(rebuilt.covers == L.covers);
            CHECK(rebuilt.poset == L.poset);
        }
}

TEST_CASE("distributive universe") {
    CHECK(enumerate_distributive(0).size() == 1);
    // posets with <= 2 elements: empty, point, 2-antichain, 2-chain
    std::vector<FiniteLattice> ds = enumerate_distributive(2);
    REQUIRE(ds.size() == 4);
    std::multiset<int> sizes;
    for (const FiniteLattice& L : ds) {
        sizes.insert(L.size());
        CHECK(is_distributive(L));
    }
    CHECK(sizes == std::multiset<int>{1, 2, 3, 4});
}

TEST_CASE("distributive by size matches the ji-parameterized universe") {
    // Every distributive lattice with <= 12 elements has a ji poset with
    // <= 11 elements; compare against the downset lattices drawn from the
    // ji-bounded enumeration, filtered by size.
    std::vector<FiniteLattice> by_size = enumerate_distributive_by_size(12);
    for (const FiniteLattice& L : by_size) {
        CHECK(L.size() <= 12);
        CHECK(is_distributive(L));
    }
    std::size_t from_ji = 0;
    for (const FiniteLattice& L : enumerate_distributive(5))
        if (L.size() <= 12) ++from_ji;
    std::size_t small = 0;
    for (const FiniteLattice& L : by_size)
        if (ji_poset(L).n <= 5) ++small;
    CHECK(from_ji == small);
    // pairwise distinct
    for (std::size_t i = 0; i < by_size.size(); ++i)
        for (std::size_t j = i + 1; j < by_size.size(); ++j)
            if (by_size[i].size() == by_size[j].size())
                CHECK_FALSE(are_isomorphic(by_size[i], by_size[j]).has_value());
}

TEST_CASE("canonical certificates are isomorphism-complete on random pairs") {
    std::vector<Poset> ps;
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n)) ps.push_back(p);
    std::mt19937 rng(99);
    for (int t = 0; t < 1000; ++t) {
        const Poset& a = ps[rng() % ps.size()];
        const Poset& b = ps[rng() % ps.size()];
        CHECK((canonical_certificate(a) == canonical_certificate(b)) ==
              poset_isomorphism(a, b).has_value());
    }
    // relabeling invariance
    for (int t = 0; t < 200; ++t) {
        const Poset& a = ps[rng() % ps.size()];
        std::vector<int> perm(a.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Bitset> up(a.n, Bitset(a.n));
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j)
                if (a.leq(i, j)) up[perm[i]].set(perm[j]);
        CHECK(canonical_certificate(Poset::from_leq(up)) == canonical_certificate(a));
    }
}
