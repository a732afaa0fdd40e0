#ifndef LATSKEL_TOLERANCE_HPP
#define LATSKEL_TOLERANCE_HPP

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "latskel/lattice.hpp"

namespace latskel {

/// Reflexive symmetric compatible relation on a lattice, stored as a
/// symmetric boolean matrix (one bitset row per element).
struct Tolerance {
    const FiniteLattice* lattice = nullptr;
    std::vector<Bitset> rel;

    bool contains(int a, int b) const { return rel[a].test(b); }
    int pair_count() const {
        int c = 0;
        for (auto& r : rel) c += r.count();
        return c;
    }
    bool is_total() const {
        return pair_count() == lattice->size() * lattice->size();
    }
};

/// Block of a tolerance: the interval [lo, hi] of L.
struct Block {
    int lo = 0;
    int hi = 0;
    Bitset members;
};

/// Factor lattice S = L/R together with the blocks, indexed by skeleton
/// element. `zeta0` is the skeleton element whose block contains bottom.
struct SkeletonResult {
    FiniteLattice skeleton;
    std::vector<Block> blocks;
    int zeta0 = 0;
};

/// Least tolerance containing the seed pairs: reflexive-symmetric closure,
/// then a worklist fixpoint under componentwise join and meet.
inline Tolerance generate_tolerance(const FiniteLattice& L,
                                    const std::vector<std::pair<int, int>>& seeds) {
    int n = L.size();
    Tolerance T;
    T.lattice = &L;
    T.rel.assign(n, Bitset(n));
    std::deque<std::pair<int, int>> work;
    auto add = [&](int a, int b) {
        if (T.rel[a].test(b)) return;
        T.rel[a].set(b);
        T.rel[b].set(a);
        if (a != b) work.emplace_back(a, b);
    };
    for (int i = 0; i < n; ++i) T.rel[i].set(i);
    for (auto [a, b] : seeds) add(a, b);
    long long total = (long long)n * n;
    while (!work.empty()) {
        // Once the relation is total it is closed; nothing left to derive.
        if (T.pair_count() == total) break;
        auto [a, b] = work.front();
        work.pop_front();
        // Combine (a,b) with every ordered pair currently present.
        for (int c = 0; c < n; ++c) {
            const int* jrow_a = &L.join_table[std::size_t(a) * n];
            const int* mrow_a = &L.meet_table[std::size_t(a) * n];
            const int* jrow_b = &L.join_table[std::size_t(b) * n];
            const int* mrow_b = &L.meet_table[std::size_t(b) * n];
            T.rel[c].for_each([&](int d) {
                add(jrow_a[c], jrow_b[d]);
                add(mrow_a[c], mrow_b[d]);
            });
        }
    }
    return T;
}

/// True iff the transitive closure of the relation is total. Also
/// evaluates the cover criterion (every covering pair related) and checks
/// the two agree.
inline bool is_glued(const Tolerance& T) {
    const FiniteLattice& L = *T.lattice;
    int n = L.size();
    // Transitive closure by union-find over related pairs.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::vector<int>* pp = &parent;
    auto find = [&](int x) {
        while ((*pp)[x] != x) x = (*pp)[x] = (*pp)[(*pp)[x]];
        return x;
    };
    for (int a = 0; a < n; ++a)
        T.rel[a].for_each([&](int b) { parent[find(a)] = find(b); });
    bool closure_total = true;
    for (int i = 1; i < n && closure_total; ++i)
        closure_total = find(i) == find(0);

    bool covers_in = true;
    for (auto [a, b] : L.covers)
        if (!T.contains(a, b)) covers_in = false;
    if (closure_total != covers_in)
        throw BlockNotInterval("glued criteria disagree: closure=" +
                               std::to_string(closure_total) +
                               " covers=" + std::to_string(covers_in));
    return closure_total;
}

/// The smallest glued tolerance: generated by all covering pairs.
inline Tolerance skeleton_tolerance(const FiniteLattice& L) {
    Tolerance T = generate_tolerance(L, L.covers);
    is_glued(T); // asserts agreement of the two glued criteria
    return T;
}

namespace detail {

/// Bron-Kerbosch with pivoting over the tolerance graph (diagonal dropped).
inline void bron_kerbosch(const std::vector<Bitset>& adj, Bitset r, Bitset p, Bitset x,
                          std::vector<Bitset>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P|X with most neighbours in P.
    int pivot = -1, best = -1;
    (p | x).for_each([&](int u) {
        int d = (p & adj[u]).count();
        if (d > best) best = d, pivot = u;
    });
    Bitset cands = p - adj[pivot];
    cands.for_each([&](int v) {
        Bitset r2 = r;
        r2.set(v);
        bron_kerbosch(adj, r2, p & adj[v], x & adj[v], out);
        p.reset(v);
        x.set(v);
    });
}

} // namespace detail

/// All blocks of a tolerance: the maximal cliques of its graph, each
/// verified to be an interval of L. Sorted by lower endpoint.
inline std::vector<Block> blocks(const Tolerance& T) {
    const FiniteLattice& L = *T.lattice;
    int n = L.size();
    std::vector<Bitset> adj(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
        adj[i] = T.rel[i];
        adj[i].reset(i);
    }
    Bitset all(n);
    for (int i = 0; i < n; ++i) all.set(i);
    std::vector<Bitset> cliques;
    detail::bron_kerbosch(adj, Bitset(n), all, Bitset(n), cliques);

    std::vector<Block> bs;
    for (const Bitset& c : cliques) {
        Block b;
        b.members = c;
        b.lo = b.hi = c.first();
        c.for_each([&](int v) {
            b.lo = L.meet(b.lo, v);
            b.hi = L.join(b.hi, v);
        });
        Bitset iv = L.poset.up[b.lo] & L.poset.dn[b.hi];
        if (!(iv == c))
            throw BlockNotInterval("maximal clique is not the interval [" +
                                   std::to_string(b.lo) + "," + std::to_string(b.hi) + "]");
        bs.push_back(std::move(b));
    }
    std::sort(bs.begin(), bs.end(),
              [](const Block& a, const Block& b) { return a.lo < b.lo; });
    return bs;
}

/// Factor lattice L/R: blocks ordered by their lower endpoints. The block
/// join/meet tables are validated against the defining containments.
inline SkeletonResult factor_lattice(const Tolerance& T) {
    const FiniteLattice& L = *T.lattice;
    SkeletonResult S;
    S.blocks = blocks(T);
    int m = int(S.blocks.size());
    std::vector<Bitset> up(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool lo_le = L.leq(S.blocks[i].lo, S.blocks[j].lo);
            bool hi_le = L.leq(S.blocks[i].hi, S.blocks[j].hi);
            if (lo_le != hi_le)
                throw BlockNotInterval("block order by 0 and by 1 disagree");
            if (lo_le) up[i].set(j);
        }
    S.skeleton = detail::lattice_from_poset(Poset::from_leq(std::move(up)));

    // Coverage of L by blocks.
    Bitset covered(L.size());
    for (const Block& b : S.blocks) covered |= b.members;
    if (covered.count() != L.size())
        throw BlockNotInterval("blocks do not cover the lattice");

    // Defining containments: {x v y} subset of alpha v beta, dually for meet,
    // and the endpoint arithmetic.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Block& a = S.blocks[i];
            const Block& b = S.blocks[j];
            const Block& jb = S.blocks[S.skeleton.join(i, j)];
            const Block& mb = S.blocks[S.skeleton.meet(i, j)];
            if (L.join(a.lo, b.lo) != jb.lo || L.meet(a.hi, b.hi) != mb.hi)
                throw BlockNotInterval("block endpoint arithmetic violated");
            bool ok = true;
            a.members.for_each([&](int x) {
                b.members.for_each([&](int y) {
                    if (!jb.members.test(L.join(x, y)) || !mb.members.test(L.meet(x, y)))
                        ok = false;
                });
            });
            if (!ok) throw BlockNotInterval("block join/meet containment violated");
        }

    S.zeta0 = -1;
    for (int i = 0; i < m; ++i)
        if (S.blocks[i].lo == L.bottom) S.zeta0 = i;
    if (S.zeta0 != S.skeleton.bottom)
        throw BlockNotInterval("least block does not contain the bottom");
    return S;
}

/// S(L) = L / Theta(L).
inline SkeletonResult skeleton(const FiniteLattice& L) {
    return factor_lattice(skeleton_tolerance(L));
}

/// S^0(L) = L, S^{i+1} = S(S^i); stops at the singleton.
inline std::vector<FiniteLattice> iterated_skeletons(const FiniteLattice& L) {
    std::vector<FiniteLattice> chain{L};
    while (chain.back().size() > 1)
        chain.push_back(skeleton(chain.back()).skeleton);
    return chain;
}

/// Least n with |S^n(L)| = 1.
inline int herrmann_rank(const FiniteLattice& L) {
    return int(iterated_skeletons(L).size()) - 1;
}

inline bool is_h_irreducible(const FiniteLattice& L, int n) {
    return herrmann_rank(L) <= n;
}

} // namespace latskel

#endif
