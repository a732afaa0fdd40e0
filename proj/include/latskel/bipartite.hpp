#ifndef LATSKEL_BIPARTITE_HPP
#define LATSKEL_BIPARTITE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latskel/bitset.hpp"
#include "latskel/errors.hpp"

namespace latskel {

/// Directed bipartite graph (U, X, E) with E from upper to lower
/// vertices. Upper subsets are masks over 0..|U|-1.
struct BipartiteGraph {
    int u = 0;
    int x = 0;
    std::vector<Bitset> adj; // adj[v] over X, one row per upper vertex

    static BipartiteGraph make(int u, int x) {
        BipartiteGraph g;
        g.u = u;
        g.x = x;
        g.adj.assign(u, Bitset(x));
        return g;
    }
};

/// Query over P(U) extended by the distinguished infinity marker; the
/// marker is a tagged state, never a sentinel subset.
struct DominationQuery {
    bool infinity = false;
    std::uint32_t subset = 0;

    static DominationQuery inf() { return {true, 0}; }
    static DominationQuery of(std::uint32_t mask) { return {false, mask}; }
};

/// d(V): lower vertices adjacent to at least one member of V; d(inf) = |X|.
inline long long domination(const BipartiteGraph& g, DominationQuery q) {
    if (q.infinity) return g.x;
    Bitset dom(g.x);
    for (int v = 0; v < g.u; ++v)
        if (q.subset >> v & 1) dom |= g.adj[v];
    return dom.count();
}

/// sigma(V): lower vertices adjacent to every member of V; sigma(empty) = |X|.
inline long long strong_domination(const BipartiteGraph& g, std::uint32_t mask) {
    Bitset s(g.x);
    for (int i = 0; i < g.x; ++i) s.set(i);
    for (int v = 0; v < g.u; ++v)
        if (mask >> v & 1) s &= g.adj[v];
    return s.count();
}

/// epsilon(V): lower vertices adjacent to exactly the members of V.
inline long long exact_domination(const BipartiteGraph& g, std::uint32_t mask) {
    Bitset s(g.x);
    for (int i = 0; i < g.x; ++i) s.set(i);
    for (int v = 0; v < g.u; ++v) {
        if (mask >> v & 1)
            s &= g.adj[v];
        else
            s -= g.adj[v];
    }
    return s.count();
}

/// Recovers the whole sigma table from the domination function alone, by
/// induction on |V| through the sieve formula. Never touches edges.
inline std::vector<long long> strong_from_domination(
    int u, const std::function<long long(DominationQuery)>& d) {
    std::uint32_t full = (u >= 32) ? ~0u : ((1u << u) - 1);
    std::vector<long long> sigma(std::size_t(full) + 1, 0);
    std::vector<std::uint32_t> masks(full + 1);
    for (std::uint32_t m = 0; m <= full; ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (std::uint32_t V : masks) {
        int n = std::popcount(V);
        if (n == 0) {
            sigma[V] = d(DominationQuery::inf());
        } else if (n == 1) {
            sigma[V] = d(DominationQuery::of(V));
        } else {
            // d(V) = sum over nonempty I subset V of (-1)^{|I|-1} sigma(I)
            long long rest = 0;
            for (std::uint32_t I = (V - 1) & V; I; I = (I - 1) & V)
                rest += (std::popcount(I) & 1 ? 1 : -1) * sigma[I];
            long long lhs = d(DominationQuery::of(V));
            long long sgn = (n & 1) ? 1 : -1; // coefficient of sigma(V) is (-1)^{n-1}
            sigma[V] = sgn * (lhs - rest);
        }
    }
    return sigma;
}

/// epsilon(V) = sum over W containing V of (-1)^{|W \ V|} sigma(W).
inline std::vector<long long> exact_from_strong(int u,
                                                const std::vector<long long>& sigma) {
    std::uint32_t full = (u >= 32) ? ~0u : ((1u << u) - 1);
    std::vector<long long> eps(std::size_t(full) + 1, 0);
    for (std::uint32_t V = 0; V <= full; ++V) {
        std::uint32_t comp = full & ~V;
        long long s = 0;
        std::uint32_t A = comp;
        while (true) {
            std::uint32_t W = V | A;
            s += (std::popcount(A) & 1 ? -1 : 1) * sigma[W];
            if (A == 0) break;
            A = (A - 1) & comp;
        }
        eps[V] = s;
    }
    return eps;
}

/// Given a bijection on upper vertices that preserves the domination
/// function, assembles the lower-vertex bijection cell-by-cell from
/// exact-domination classes and verifies the pair is a graph isomorphism.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
complete_isomorphism(const BipartiteGraph& g, const BipartiteGraph& h,
                     const std::vector<int>& phi) {
    if (g.u != h.u || int(phi.size()) != g.u) return std::nullopt;
    std::uint32_t full = (1u << g.u) - 1;
    auto phi_mask = [&](std::uint32_t V) {
        std::uint32_t r = 0;
        for (int v = 0; v < g.u; ++v)
            if (V >> v & 1) r |= 1u << phi[v];
        return r;
    };
    if (domination(g, DominationQuery::inf()) != domination(h, DominationQuery::inf()))
        return std::nullopt;
    for (std::uint32_t V = 0; V <= full; ++V)
        if (domination(g, DominationQuery::of(V)) !=
            domination(h, DominationQuery::of(phi_mask(V))))
            return std::nullopt;

    // Exact class of every lower vertex: the set of its upper neighbours.
    auto classes = [](const BipartiteGraph& gr) {
        std::vector<std::uint32_t> cls(gr.x, 0);
        for (int v = 0; v < gr.u; ++v)
            gr.adj[v].for_each([&](int xx) { cls[xx] |= 1u << v; });
        return cls;
    };
    std::vector<std::uint32_t> cg = classes(g), ch = classes(h);
    std::vector<int> xi(g.x, -1);
    for (std::uint32_t V = 0; V <= full; ++V) {
        std::vector<int> cell_g, cell_h;
        for (int xx = 0; xx < g.x; ++xx)
            if (cg[xx] == V) cell_g.push_back(xx);
        std::uint32_t W = phi_mask(V);
        for (int xx = 0; xx < h.x; ++xx)
            if (ch[xx] == W) cell_h.push_back(xx);
        if (cell_g.size() != cell_h.size()) return std::nullopt;
        for (std::size_t i = 0; i < cell_g.size(); ++i) xi[cell_g[i]] = cell_h[i];
    }
    // Verify edge preservation in both directions.
    for (int v = 0; v < g.u; ++v)
        for (int xx = 0; xx < g.x; ++xx)
            if (g.adj[v].test(xx) != h.adj[phi[v]].test(xi[xx])) return std::nullopt;
    return std::make_pair(phi, xi);
}

} // namespace latskel

#endif
