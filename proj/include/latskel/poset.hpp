#ifndef LATSKEL_POSET_HPP
#define LATSKEL_POSET_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "latskel/bitset.hpp"
#include "latskel/errors.hpp"

namespace latskel {

/// Finite poset on elements 0..n-1. `up[i]` is the principal filter of i
/// (including i itself), `dn[i]` the principal ideal. Immutable once built.
struct Poset {
    int n = 0;
    std::vector<Bitset> up;
    std::vector<Bitset> dn;

    Poset() = default;

    bool leq(int a, int b) const { return up[a].test(b); }
    bool lt(int a, int b) const { return a != b && leq(a, b); }

    /// Reflexive-transitive closure of a cover list. Rejects cycles.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
        Poset p;
        p.n = n;
        p.up.assign(n, Bitset(n));
        std::vector<std::vector<int>> succ(n);
        for (auto [a, b] : covers) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError(0, "cover element out of range");
            succ[a].push_back(b);
        }
        // Closure by depth-first reachability from each element.
        for (int i = 0; i < n; ++i) {
            std::vector<int> stack{i};
            p.up[i].set(i);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : succ[x])
                    if (!p.up[i].test(y)) {
                        p.up[i].set(y);
                        stack.push_back(y);
                    }
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p.up[i].test(j) && p.up[j].test(i))
                    throw CycleDetected("elements " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are mutually reachable");
        p.fill_down();
        return p;
    }

    /// Wraps an order matrix given as principal filters. Validates the
    /// order axioms.
    static Poset from_leq(std::vector<Bitset> up_rows) {
        Poset p;
        p.n = int(up_rows.size());
        p.up = std::move(up_rows);
        for (int i = 0; i < p.n; ++i) {
            if (!p.up[i].test(i)) throw CycleDetected("order not reflexive");
            for (int j = 0; j < p.n; ++j) {
                if (i != j && p.up[i].test(j) && p.up[j].test(i))
                    throw CycleDetected("order not antisymmetric");
                if (p.up[i].test(j) && !p.up[j].subset_of(p.up[i]))
                    throw CycleDetected("order not transitive");
            }
        }
        p.fill_down();
        return p;
    }

    /// Transitive reduction: a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> cs;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || !leq(a, b)) continue;
                Bitset between = up[a] & dn[b];
                if (between.count() == 2) cs.emplace_back(a, b);
            }
        return cs;
    }

    bool covered_by(int a, int b) const {
        return lt(a, b) && (up[a] & dn[b]).count() == 2;
    }

    /// Longest chain cardinality minus one.
    int length() const {
        if (n == 0) return 0;
        std::vector<int> order = by_ideal_size();
        std::vector<int> h(n, 0);
        int best = 0;
        for (int x : order) {
            for (int y = 0; y < n; ++y)
                if (lt(y, x)) h[x] = std::max(h[x], h[y] + 1);
            best = std::max(best, h[x]);
        }
        return best;
    }

    /// Height of each element: longest chain below it.
    std::vector<int> heights() const {
        std::vector<int> h(n, 0);
        for (int x : by_ideal_size())
            for (int y = 0; y < n; ++y)
                if (lt(y, x)) h[x] = std::max(h[x], h[y] + 1);
        return h;
    }

    std::vector<int> minimal_elements() const {
        std::vector<int> ms;
        for (int i = 0; i < n; ++i)
            if (dn[i].count() == 1) ms.push_back(i);
        return ms;
    }
    std::vector<int> maximal_elements() const {
        std::vector<int> ms;
        for (int i = 0; i < n; ++i)
            if (up[i].count() == 1) ms.push_back(i);
        return ms;
    }

    /// Elements sorted by ideal size; a linear extension.
    std::vector<int> by_ideal_size() const {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return dn[a].count() < dn[b].count(); });
        return order;
    }

    /// Induced subposet on the given elements, with the index map back.
    Poset restrict(const std::vector<int>& elems) const {
        Poset q;
        q.n = int(elems.size());
        q.up.assign(q.n, Bitset(q.n));
        for (int i = 0; i < q.n; ++i)
            for (int j = 0; j < q.n; ++j)
                if (leq(elems[i], elems[j])) q.up[i].set(j);
        q.fill_down();
        return q;
    }

    bool operator==(const Poset& o) const { return n == o.n && up == o.up; }

private:
    void fill_down() {
        dn.assign(n, Bitset(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (up[i].test(j)) dn[j].set(i);
    }
};

/// Full Mobius table of a poset, mu[x][y] per the usual recursion over
/// intervals; 0 when x is not below y.
class MobiusTable {
public:
    explicit MobiusTable(const Poset& p) : n_(p.n), mu_(p.n, std::vector<long long>(p.n, 0)) {
        std::vector<int> order = p.by_ideal_size();
        for (int x = 0; x < n_; ++x) {
            mu_[x][x] = 1;
            for (int y : order) {
                if (!p.lt(x, y)) continue;
                long long s = 0;
                for (int z = 0; z < n_; ++z)
                    if (p.leq(x, z) && p.lt(z, y)) s += mu_[x][z];
                mu_[x][y] = -s;
            }
        }
    }
    long long operator()(int x, int y) const { return mu_[x][y]; }

private:
    int n_;
    std::vector<std::vector<long long>> mu_;
};

inline long long mobius(const Poset& p, int x, int y) { return MobiusTable(p)(x, y); }

namespace detail {

template <typename F>
bool enum_iso_rec(const Poset& a, const Poset& b, const std::vector<int>& order,
                  const std::vector<long long>& ca, const std::vector<long long>& cb,
                  std::vector<int>& img, std::vector<int>& used, int depth, F&& visit) {
    int n = a.n;
    if (depth == n) return visit(img);
    int x = order[depth];
    for (int y = 0; y < n; ++y) {
        if (used[y] || cb[y] != ca[x]) continue;
        bool ok = true;
        for (int k = 0; k < depth && ok; ++k) {
            int u = order[k], v = img[order[k]];
            ok = a.leq(x, u) == b.leq(y, v) && a.leq(u, x) == b.leq(v, y);
        }
        if (!ok) continue;
        img[x] = y;
        used[y] = 1;
        if (enum_iso_rec(a, b, order, ca, cb, img, used, depth + 1, visit)) return true;
        used[y] = 0;
        img[x] = -1;
    }
    return false;
}

} // namespace detail

/// Vertex invariants for isomorphism search: (height, |ideal|, |filter|)
/// refined by neighbor color multisets until stable.
inline std::vector<long long> refined_colors(const Poset& p) {
        std::vector<int> h = p.heights();
        // (height, |ideal|, |filter|, #lower covers, #upper covers), then
        // refined by multisets of neighbor colors until stable.
        std::vector<long long> color(p.n);
        for (int i = 0; i < p.n; ++i)
            color[i] = ((long long)h[i] << 40) ^ ((long long)p.dn[i].count() << 20) ^
                       p.up[i].count();
        for (int round = 0; round < p.n; ++round) {
            std::vector<std::vector<long long>> sig(p.n);
            for (int i = 0; i < p.n; ++i) {
                sig[i].push_back(color[i]);
                std::vector<long long> below, above;
                for (int j = 0; j < p.n; ++j) {
                    if (p.lt(j, i)) below.push_back(color[j]);
                    if (p.lt(i, j)) above.push_back(color[j]);
                }
                std::sort(below.begin(), below.end());
                std::sort(above.begin(), above.end());
                sig[i].push_back(below.size());
                sig[i].insert(sig[i].end(), below.begin(), below.end());
                sig[i].insert(sig[i].end(), above.begin(), above.end());
            }
            std::vector<std::vector<long long>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            std::vector<long long> next(p.n);
            for (int i = 0; i < p.n; ++i)
                next[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) -
                          sorted.begin();
            if (next == color) break;
            color = next;
        }
        return color;
}

/// Visits order isomorphisms a -> b until `visit` returns true. Returns
/// whether the visit was stopped (i.e. some isomorphism was accepted).
template <typename F>
bool enumerate_isomorphisms(const Poset& a, const Poset& b, F&& visit) {
    if (a.n != b.n) return false;
    int n = a.n;
    if (n == 0) {
        std::vector<int> empty;
        return visit(empty);
    }
    std::vector<long long> ca = refined_colors(a), cb = refined_colors(b);
    {
        std::vector<long long> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return ca[x] < ca[y]; });
    std::vector<int> img(n, -1), used(n, 0);
    return detail::enum_iso_rec(a, b, order, ca, cb, img, used, 0, visit);
}

inline std::optional<std::vector<int>> poset_isomorphism(const Poset& a, const Poset& b) {
    std::optional<std::vector<int>> result;
    enumerate_isomorphisms(a, b, [&](const std::vector<int>& img) {
        result = img;
        return true;
    });
    return result;
}

} // namespace latskel

#endif
