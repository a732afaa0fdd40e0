#ifndef LATSKEL_TESTS_FIXTURES_HPP
#define LATSKEL_TESTS_FIXTURES_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "latskel/lattice.hpp"

namespace fixtures {

using latskel::FiniteLattice;
using latskel::Poset;

/// n-element chain 0 < 1 < ... < n-1.
inline FiniteLattice chain(int n) {
    std::vector<std::pair<int, int>> cs;
    for (int i = 0; i + 1 < n; ++i) cs.emplace_back(i, i + 1);
    return latskel::build_lattice(n, cs);
}

/// Boolean lattice of rank k (downsets of a k-antichain).
inline FiniteLattice boolean(int k) {
    return latskel::downset_lattice(Poset::from_covers(k, {}));
}

/// Diamond: bottom, three atoms, top.
inline FiniteLattice m3() {
    return latskel::build_lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

/// Pentagon: 0 < a < 1 and 0 < b < c < 1 with a incomparable to b, c.
inline FiniteLattice n5() {
    return latskel::build_lattice(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}});
}

/// Downset lattice of the poset u > x1, u > x2: a square with a point on top.
inline FiniteLattice d5() {
    return latskel::build_lattice(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
}

/// Brute-force join/meet oracle: scans all common bounds, independent of
/// the precomputed tables.
inline int brute_join(const FiniteLattice& L, int a, int b) {
    int best = -1;
    for (int c = 0; c < L.size(); ++c) {
        if (!L.leq(a, c) || !L.leq(b, c)) continue;
        if (best == -1 || L.leq(c, best)) best = c;
    }
    // verify minimality
    for (int c = 0; c < L.size(); ++c)
        if (L.leq(a, c) && L.leq(b, c) && !L.leq(best, c)) return -1;
    return best;
}

inline int brute_meet(const FiniteLattice& L, int a, int b) {
    int best = -1;
    for (int c = 0; c < L.size(); ++c) {
        if (!L.leq(c, a) || !L.leq(c, b)) continue;
        if (best == -1 || L.leq(best, c)) best = c;
    }
    for (int c = 0; c < L.size(); ++c)
        if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, best)) return -1;
    return best;
}

/// Longest chain by exhaustive DFS over strictly increasing sequences.
inline int brute_length(const Poset& p) {
    int best = 0;
    std::vector<int> stack;
    std::function<void(int, int)> dfs = [&](int x, int depth) {
        best = std::max(best, depth);
        for (int y = 0; y < p.n; ++y)
            if (p.lt(x, y)) dfs(y, depth + 1);
    };
    for (int x = 0; x < p.n; ++x) dfs(x, 0);
    return best;
}

/// Isomorphism by trying all n! bijections. Usable for n <= 7.
inline bool brute_isomorphic(const Poset& a, const Poset& b) {
    if (a.n != b.n) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.n && ok; ++i)
            for (int j = 0; j < a.n && ok; ++j)
                if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace fixtures

#endif
