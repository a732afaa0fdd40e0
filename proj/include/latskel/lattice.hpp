#ifndef LATSKEL_LATTICE_HPP
#define LATSKEL_LATTICE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latskel/errors.hpp"
#include "latskel/poset.hpp"

namespace latskel {

/// Finite lattice on elements 0..n-1 with precomputed join/meet tables.
/// Immutable after construction; all members are plain data.
struct FiniteLattice {
    Poset poset;
    std::vector<std::pair<int, int>> covers; // transitive reduction, sorted
    std::vector<int> join_table;             // n*n, row-major
    std::vector<int> meet_table;
    int bottom = 0;
    int top = 0;

    int size() const { return poset.n; }
    bool leq(int a, int b) const { return poset.leq(a, b); }
    int join(int a, int b) const { return join_table[a * poset.n + b]; }
    int meet(int a, int b) const { return meet_table[a * poset.n + b]; }

    int length() const { return poset.length(); }

    /// Number of lower covers of x.
    int lower_cover_count(int x) const {
        int c = 0;
        for (auto [a, b] : covers)
            if (b == x) ++c;
        return c;
    }
};

namespace detail {

/// Builds join/meet tables from a validated order; throws NotALattice /
/// NoBounds when a pair lacks a unique bound or the order is unbounded.
inline FiniteLattice lattice_from_poset(Poset p) {
    int n = p.n;
    if (n == 0) throw NoBounds("empty carrier");
    FiniteLattice L;
    L.join_table.assign(std::size_t(n) * n, -1);
    L.meet_table.assign(std::size_t(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Bitset ub = p.up[a] & p.up[b];
            int j = -1;
            ub.for_each([&](int c) {
                if (ub.subset_of(p.up[c])) j = (j == -1 ? c : -2);
            });
            if (j < 0) {
                if (ub.none())
                    throw NoBounds("no upper bound for " + std::to_string(a) + "," +
                                   std::to_string(b));
                throw NotALattice("no unique join for " + std::to_string(a) + "," +
                                  std::to_string(b));
            }
            Bitset lb = p.dn[a] & p.dn[b];
            int m = -1;
            lb.for_each([&](int c) {
                if (lb.subset_of(p.dn[c])) m = (m == -1 ? c : -2);
            });
            if (m < 0) {
                if (lb.none())
                    throw NoBounds("no lower bound for " + std::to_string(a) + "," +
                                   std::to_string(b));
                throw NotALattice("no unique meet for " + std::to_string(a) + "," +
                                  std::to_string(b));
            }
            L.join_table[a * n + b] = L.join_table[b * n + a] = j;
            L.meet_table[a * n + b] = L.meet_table[b * n + a] = m;
        }
    L.covers = p.covers();
    std::sort(L.covers.begin(), L.covers.end());
    L.bottom = L.meet_table[0];
    L.top = L.join_table[0];
    for (int a = 1; a < n; ++a) {
        L.bottom = L.meet_table[std::size_t(L.bottom) * n + a];
        L.top = L.join_table[std::size_t(L.top) * n + a];
    }
    L.poset = std::move(p);
    return L;
}

} // namespace detail

/// Build a lattice from a cover list. The order is the reflexive-transitive
/// closure of the covers; the stored cover list is re-derived as the
/// transitive reduction of that order.
inline FiniteLattice build_lattice(int n, const std::vector<std::pair<int, int>>& covers) {
    return detail::lattice_from_poset(Poset::from_covers(n, covers));
}

/// Covers of the bottom element.
inline Bitset atoms(const FiniteLattice& L) {
    Bitset a(L.size());
    for (auto [x, y] : L.covers)
        if (x == L.bottom) a.set(y);
    return a;
}

/// Non-bottom elements with exactly one lower cover.
inline Bitset join_irreducibles(const FiniteLattice& L) {
    std::vector<int> lc(L.size(), 0);
    for (auto [x, y] : L.covers) lc[y]++;
    Bitset ji(L.size());
    for (int x = 0; x < L.size(); ++x)
        if (x != L.bottom && lc[x] == 1) ji.set(x);
    return ji;
}

/// Join-irreducibles that are not atoms.
inline Bitset upper_ji(const FiniteLattice& L) { return join_irreducibles(L) - atoms(L); }

/// Induced order on Ji(L). `out_elems`, when given, receives the
/// L-elements in subposet index order.
inline Poset ji_poset(const FiniteLattice& L, std::vector<int>* out_elems = nullptr) {
    std::vector<int> elems = join_irreducibles(L).to_vector();
    if (out_elems) *out_elems = elems;
    return L.poset.restrict(elems);
}

inline int ji_length(const FiniteLattice& L) { return ji_poset(L).length(); }

/// Exhaustive evaluation of the distributive identity.
inline bool is_distributive(const FiniteLattice& L) {
    int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
                    return false;
    return true;
}

/// Exhaustive evaluation of the modular law.
inline bool is_modular(const FiniteLattice& L) {
    int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (!L.leq(x, z)) continue;
            for (int y = 0; y < n; ++y)
                if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) return false;
        }
    return true;
}

/// Sublattice-pattern checks, used to cross-check the identity versions.
/// N5: pentagon; M3: diamond.
inline bool has_n5(const FiniteLattice& L) {
    int n = L.size();
    // x < z incomparable to y, with x v y = z v y and x ^ y = z ^ y.
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (x == z || !L.leq(x, z)) continue;
            for (int y = 0; y < n; ++y) {
                if (L.leq(y, x) || L.leq(x, y) || L.leq(y, z) || L.leq(z, y)) continue;
                if (L.join(x, y) == L.join(z, y) && L.meet(x, y) == L.meet(z, y))
                    return true;
            }
        }
    return false;
}

inline bool has_m3(const FiniteLattice& L) {
    int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (L.leq(x, y) || L.leq(y, x)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (L.leq(x, z) || L.leq(z, x) || L.leq(y, z) || L.leq(z, y)) continue;
                int j = L.join(x, y);
                int m = L.meet(x, y);
                if (L.join(x, z) == j && L.join(y, z) == j && L.meet(x, z) == m &&
                    L.meet(y, z) == m)
                    return true;
            }
        }
    return false;
}

/// Lattice isomorphism; for finite lattices this coincides with order
/// isomorphism of the carriers.
inline std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& a,
                                                      const FiniteLattice& b) {
    return poset_isomorphism(a.poset, b.poset);
}

/// Lattice of all down-sets of P ordered by inclusion. Elements are
/// ordered by (popcount, bit pattern) so the output is deterministic.
/// `out_ideals`, when given, receives the down-set of each element.
inline FiniteLattice downset_lattice(const Poset& P, int cap = 4096,
                                     std::vector<Bitset>* out_ideals = nullptr) {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> ideals;
    Bitset empty(P.n);
    seen.insert(empty);
    ideals.push_back(empty);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        Bitset I = ideals[k];
        for (int x = 0; x < P.n; ++x) {
            if (I.test(x)) continue;
            Bitset strict = P.dn[x];
            strict.reset(x);
            if (!strict.subset_of(I)) continue;
            Bitset J = I;
            J.set(x);
            if (seen.insert(J).second) {
                ideals.push_back(J);
                if (int(ideals.size()) > cap)
                    throw TooLarge("downset lattice exceeds cap of " + std::to_string(cap));
            }
        }
    }
    std::sort(ideals.begin(), ideals.end(), [](const Bitset& a, const Bitset& b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    int m = int(ideals.size());
    std::vector<Bitset> up(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (ideals[i].subset_of(ideals[j])) up[i].set(j);
    if (out_ideals) *out_ideals = ideals;
    return detail::lattice_from_poset(Poset::from_leq(std::move(up)));
}

/// Sublattice [a,b] with re-indexed elements. `out_elems`, when given,
/// receives the original L-indices in interval index order.
inline FiniteLattice interval(const FiniteLattice& L, int a, int b,
                              std::vector<int>* out_elems = nullptr) {
    if (!L.leq(a, b))
        throw NotComparable(std::to_string(a) + " is not below " + std::to_string(b));
    std::vector<int> elems = (L.poset.up[a] & L.poset.dn[b]).to_vector();
    if (out_elems) *out_elems = elems;
    return detail::lattice_from_poset(L.poset.restrict(elems));
}

/// Number of elements of L with exactly k lower covers.
inline int jk_count(const FiniteLattice& L, int k) {
    int c = 0;
    for (int x = 0; x < L.size(); ++x)
        if (L.lower_cover_count(x) == k) ++c;
    return c;
}

} // namespace latskel

#endif
