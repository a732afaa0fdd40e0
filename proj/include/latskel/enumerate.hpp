#ifndef LATSKEL_ENUMERATE_HPP
#define LATSKEL_ENUMERATE_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latskel/lattice.hpp"

namespace latskel {

/// Canonical certificate of a poset: the minimum order-matrix string over
/// all permutations that respect the refined color classes. Equal
/// certificates iff isomorphic.
inline std::string canonical_certificate(const Poset& p) {
    int n = p.n;
    if (n == 0) return "0:";
    std::vector<long long> color = refined_colors(p);

    // Elements grouped by color, classes in ascending color order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return color[a] < color[b]; });
    std::vector<std::pair<int, int>> classes; // [begin, end) into order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    long long work = 1;
    for (auto [b, e] : classes) {
        for (int k = 2; k <= e - b; ++k) work *= k;
        if (work > 5'000'000) throw TooLarge("canonical form search space too large");
    }

    std::string best;
    std::vector<int> perm = order;
    auto emit = [&]() {
        std::string s;
        s.reserve(std::size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s.push_back(p.leq(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || s < best) best = std::move(s);
    };
    // Odometer over within-class permutations.
    std::vector<std::vector<int>> cls;
    for (auto [b, e] : classes)
        cls.emplace_back(order.begin() + b, order.begin() + e);
    std::vector<std::vector<int>> cur = cls;
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
        if (ci == cls.size()) {
            int at = 0;
            for (auto& c : cur)
                for (int v : c) perm[at++] = v;
            emit();
            return;
        }
        std::sort(cur[ci].begin(), cur[ci].end());
        do {
            rec(ci + 1);
        } while (std::next_permutation(cur[ci].begin(), cur[ci].end()));
    };
    rec(0);
    return std::to_string(n) + ":" + best;
}

inline std::string canonical_certificate(const FiniteLattice& L) {
    return canonical_certificate(L.poset);
}

namespace detail {

/// All down-closed subsets of p, as bitsets.
inline std::vector<Bitset> ideals_of(const Poset& p) {
    std::vector<Bitset> out;
    int n = p.n;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
        Bitset s(n);
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) s.set(i);
        bool closed = true;
        s.for_each([&](int x) {
            if (!p.dn[x].subset_of(s)) closed = false;
        });
        if (closed) out.push_back(s);
    }
    return out;
}

/// Extends p by one new maximal element whose strict down-set is `ideal`.
inline Poset extend(const Poset& p, const Bitset& ideal) {
    int n = p.n;
    std::vector<Bitset> up(n + 1, Bitset(n + 1));
    for (int i = 0; i < n; ++i) {
        p.up[i].for_each([&](int j) { up[i].set(j); });
        if (ideal.test(i)) up[i].set(n);
    }
    up[n].set(n);
    return Poset::from_leq(std::move(up));
}

/// Does every element have a unique greatest lower bound with a new
/// element whose down-set is `ideal`?
inline bool meets_stay_unique(const Poset& p, const Bitset& ideal) {
    for (int x = 0; x < p.n; ++x) {
        Bitset lb = ideal & p.dn[x];
        if (lb.none()) return false; // no common lower bound at all
        int mx = -1;
        bool unique = true;
        lb.for_each([&](int c) {
            if (lb.subset_of(p.dn[c])) {
                if (mx != -1) unique = false;
                mx = c;
            }
        });
        if (mx == -1 || !unique) return false;
    }
    return true;
}

/// Grows posets by one-point extensions, visiting one representative per
/// isomorphism class at every size. Subtrees of already-seen classes are
/// pruned: the extension options depend only on the isomorphism class.
template <typename Visit>
void grow_posets(int nmax, bool lattice_mode, Visit&& visit) {
    std::unordered_set<std::string> seen;
    std::function<void(const Poset&)> rec = [&](const Poset& p) {
        if (!seen.insert(canonical_certificate(p)).second) return;
        visit(p);
        if (p.n == nmax) return;
        for (const Bitset& ideal : ideals_of(p)) {
            if (lattice_mode && p.n > 0) {
                // Prefixes of a lattice in extension order are meet-closed.
                if (ideal.none()) continue;
                if (!meets_stay_unique(p, ideal)) continue;
            }
            rec(extend(p, ideal));
        }
    };
    rec(Poset{});
}

} // namespace detail

/// All posets on exactly n elements up to isomorphism, generated by
/// one-point extensions and deduplicated by canonical certificate.
/// `hard_cap` is the documented limit; internal callers may raise it.
inline std::vector<Poset> enumerate_posets(int n, int hard_cap = 7) {
    if (n > hard_cap) throw TooLarge("poset enumeration capped at n = " +
                                     std::to_string(hard_cap));
    std::vector<Poset> out;
    detail::grow_posets(n, false, [&](const Poset& p) {
        if (p.n == n) out.push_back(p);
    });
    return out;
}

/// All lattices with exactly n elements up to isomorphism. Generation is
/// pruned to meet-semilattice prefixes with a unique bottom; candidates
/// are kept when a unique top exists and full lattice validation passes.
inline std::vector<FiniteLattice> enumerate_lattices(int n, int hard_cap = 8) {
    if (n > hard_cap) throw TooLarge("lattice enumeration capped at n = " +
                                     std::to_string(hard_cap));
    std::vector<FiniteLattice> out;
    detail::grow_posets(n, true, [&](const Poset& p) {
        if (p.n != n || p.maximal_elements().size() != 1) return;
        out.push_back(detail::lattice_from_poset(p));
    });
    return out;
}

/// Downset lattices of all posets with at most max_ji elements; pairwise
/// non-isomorphic by Birkhoff duality.
inline std::vector<FiniteLattice> enumerate_distributive(int max_ji, int cap = 4096) {
    std::vector<FiniteLattice> out;
    detail::grow_posets(max_ji, false,
                        [&](const Poset& p) { out.push_back(downset_lattice(p, cap)); });
    return out;
}

/// All distributive lattices with at most max_elems elements: posets are
/// grown only while their down-set count stays within the bound (the
/// count can only grow under extension).
inline std::vector<FiniteLattice> enumerate_distributive_by_size(int max_elems) {
    std::vector<FiniteLattice> out;
    std::unordered_set<std::string> seen;

    std::function<void(const Poset&)> rec = [&](const Poset& p) {
        if (!seen.insert(canonical_certificate(p)).second) return;
        out.push_back(downset_lattice(p, max_elems));
        if (p.n >= max_elems - 1) return;
        for (const Bitset& ideal : detail::ideals_of(p)) {
            Poset q = detail::extend(p, ideal);
            try {
                downset_lattice(q, max_elems);
            } catch (const TooLarge&) {
                continue;
            }
            rec(q);
        }
    };
    rec(Poset{});
    return out;
}

} // namespace latskel

#endif
