#ifndef LATSKEL_RECONSTRUCT_HPP
#define LATSKEL_RECONSTRUCT_HPP

#include <string>
#include <utility>
#include <vector>

#include "latskel/bipartite.hpp"
#include "latskel/wds.hpp"

namespace latskel {

struct ReconstructionReport {
    FiniteLattice lattice;
    Poset ji;                          // height <= 1; atoms 0..m-1, then upper ji
    BipartiteGraph graph;              // U = upper ji copies, X = atoms
    std::vector<int> block_assignment; // U index -> K element
};

/// d at block level: atoms below the lower endpoint of the join of B.
/// Valid because every upper join-irreducible has the lower endpoint of
/// its block as its unique lower cover.
inline long long blockwise_domination(const WeightedDoubleSkeleton& S,
                                      const std::vector<int>& B) {
    if (B.empty()) return 0;
    int z0 = S.zeta0();
    int j = z0;
    for (int a : B) {
        if (!S.K.poset.lt(z0, a))
            throw InvalidWds("blockwise domination requires blocks above the least one");
        j = S.K.join(j, a);
    }
    return extended_weight(S, S.eta0[z0], S.eta0[j]);
}

/// Rebuilds a distributive lattice with ji-length <= 1 from its abstract
/// weighted double skeleton. Every count is validated; a failure means
/// the input is not the WDS of any in-scope lattice.
inline ReconstructionReport reconstruct(const WeightedDoubleSkeleton& S) {
    validate_wds(S);
    ReconstructionReport rep;
    int z0 = S.zeta0();
    long long m = extended_weight(S, S.eta0[z0], S.eta1[z0]); // atom count

    if (S.K.size() == 1) {
        // Boolean base case: rank m cube.
        Poset antichain = Poset::from_covers(int(m), {});
        rep.ji = antichain;
        rep.graph = BipartiteGraph::make(0, int(m));
        rep.lattice = downset_lattice(antichain);
        return rep;
    }

    std::vector<int> A;          // blocks with join-irreducibles above zeta0
    std::vector<long long> nOfA; // their J counts
    for (int a = 0; a < S.K.size(); ++a) {
        if (a == z0) continue;
        long long c = j_alpha_count(S, a);
        if (c < 0)
            throw NegativeJCount("block " + std::to_string(a) + " has count " +
                                 std::to_string(c));
        if (c > 0) {
            A.push_back(a);
            nOfA.push_back(c);
        }
    }
    if (int(A.size()) > 20) throw TooLarge("too many blocks for the sieve tables");

    auto d = [&](DominationQuery q) -> long long {
        if (q.infinity) return m;
        std::vector<int> B;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (q.subset >> i & 1) B.push_back(A[i]);
        return blockwise_domination(S, B);
    };
    std::vector<long long> sigma = strong_from_domination(int(A.size()), d);
    std::vector<long long> eps = exact_from_strong(int(A.size()), sigma);

    long long assigned = 0;
    for (std::uint32_t V = 1; V < eps.size(); ++V) assigned += eps[V];
    for (long long e : eps)
        if (e < 0) throw InconsistentCounts("negative exact-domination count");
    if (assigned > m)
        throw InconsistentCounts("exact-domination counts exceed the atom count");

    // U: copies of each block, consecutive, blocks in K order.
    int nu = 0;
    for (long long c : nOfA) nu += int(c);
    rep.graph = BipartiteGraph::make(nu, int(m));
    rep.block_assignment.clear();
    std::vector<int> copies_begin(A.size());
    {
        int at = 0;
        for (std::size_t i = 0; i < A.size(); ++i) {
            copies_begin[i] = at;
            for (long long c = 0; c < nOfA[i]; ++c) rep.block_assignment.push_back(A[i]);
            at += int(nOfA[i]);
        }
    }
    // Atoms numbered consecutively per exact class, masks ascending;
    // class 0 atoms stay isolated.
    int next_atom = int(m - assigned); // eps(empty) isolated atoms first
    for (std::uint32_t V = 1; V < eps.size(); ++V) {
        for (long long c = 0; c < eps[V]; ++c, ++next_atom)
            for (std::size_t i = 0; i < A.size(); ++i)
                if (V >> i & 1)
                    for (long long k = 0; k < nOfA[i]; ++k)
                        rep.graph.adj[copies_begin[i] + k].set(next_atom);
    }

    // ji poset: atoms 0..m-1 below, upper vertices m..m+nu-1.
    std::vector<std::pair<int, int>> covers;
    for (int v = 0; v < nu; ++v)
        rep.graph.adj[v].for_each([&](int xx) { covers.emplace_back(xx, int(m) + v); });
    rep.ji = Poset::from_covers(int(m) + nu, covers);
    rep.lattice = downset_lattice(rep.ji);
    return rep;
}

} // namespace latskel

#endif
