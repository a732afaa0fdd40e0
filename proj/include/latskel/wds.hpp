#ifndef LATSKEL_WDS_HPP
#define LATSKEL_WDS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latskel/lattice.hpp"
#include "latskel/tolerance.hpp"

namespace latskel {

/// Abstract weighted double skeleton (P, <=, K, eta0, eta1, w). Concrete
/// instances extracted from a lattice also carry `p_elems`, the L-element
/// behind each point of P; abstract inputs leave it empty. All operations
/// below use the abstract data only.
struct WeightedDoubleSkeleton {
    Poset P;
    FiniteLattice K;
    std::vector<int> eta0; // K element -> P element
    std::vector<int> eta1;
    std::map<std::pair<int, int>, int> w; // cover edge of P -> weight
    std::vector<int> p_elems;             // concrete back-references, may be empty

    int zeta0() const { return K.bottom; }
};

struct WdsIsomorphism {
    std::vector<int> psi;   // P -> P'
    std::vector<int> kappa; // K -> K'
};

/// Checks every axiom of an abstract WDS; throws InvalidWds naming the
/// first failed one.
inline void validate_wds(const WeightedDoubleSkeleton& S) {
    int kn = S.K.size(), pn = S.P.n;
    if (int(S.eta0.size()) != kn || int(S.eta1.size()) != kn)
        throw InvalidWds("eta0/eta1 must be defined on all of K");
    for (int x = 0; x < kn; ++x)
        if (S.eta0[x] < 0 || S.eta0[x] >= pn || S.eta1[x] < 0 || S.eta1[x] >= pn)
            throw InvalidWds("eta image out of range of P");

    auto embedding = [&](const std::vector<int>& eta, const char* name) {
        for (int x = 0; x < kn; ++x)
            for (int y = 0; y < kn; ++y)
                if (S.K.leq(x, y) != S.P.leq(eta[x], eta[y]))
                    throw InvalidWds(std::string(name) + " is not an order-embedding");
    };
    embedding(S.eta0, "eta0");
    embedding(S.eta1, "eta1");

    // eta0 join-preserving: eta0(x v y) is the least upper bound in P.
    for (int x = 0; x < kn; ++x)
        for (int y = 0; y < kn; ++y) {
            int jp = S.eta0[S.K.join(x, y)];
            if (!S.P.leq(S.eta0[x], jp) || !S.P.leq(S.eta0[y], jp))
                throw InvalidWds("eta0 does not preserve joins");
            for (int q = 0; q < pn; ++q)
                if (S.P.leq(S.eta0[x], q) && S.P.leq(S.eta0[y], q) && !S.P.leq(jp, q))
                    throw InvalidWds("eta0 does not preserve joins");
            int mp = S.eta1[S.K.meet(x, y)];
            if (!S.P.leq(mp, S.eta1[x]) || !S.P.leq(mp, S.eta1[y]))
                throw InvalidWds("eta1 does not preserve meets");
            for (int q = 0; q < pn; ++q)
                if (S.P.leq(q, S.eta1[x]) && S.P.leq(q, S.eta1[y]) && !S.P.leq(q, mp))
                    throw InvalidWds("eta1 does not preserve meets");
        }

    std::vector<char> hit(pn, 0);
    for (int x = 0; x < kn; ++x) hit[S.eta0[x]] = hit[S.eta1[x]] = 1;
    for (int q = 0; q < pn; ++q)
        if (!hit[q]) throw InvalidWds("P is not covered by the eta images");

    for (int x = 0; x < kn; ++x)
        if (!S.P.leq(S.eta0[x], S.eta1[x]))
            throw InvalidWds("eta0(x) <= eta1(x) fails");

    std::vector<std::pair<int, int>> cs = S.P.covers();
    std::sort(cs.begin(), cs.end());
    std::vector<std::pair<int, int>> keys;
    for (auto& [e, wt] : S.w) {
        keys.push_back(e);
        if (wt < 1) throw InvalidWds("weight below 1 on a cover edge");
    }
    if (keys != cs) throw InvalidWds("w is not defined exactly on the covers of P");
}

/// The weighted double skeleton of L: block endpoints with the order
/// inherited from L, the skeleton as K, and interval lengths as weights.
inline WeightedDoubleSkeleton extract_wds(const FiniteLattice& L,
                                          const SkeletonResult& skel) {
    WeightedDoubleSkeleton S;
    std::vector<int> elems;
    for (const Block& b : skel.blocks) {
        elems.push_back(b.lo);
        elems.push_back(b.hi);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    S.p_elems = elems;
    S.P = L.poset.restrict(elems);
    S.K = skel.skeleton;
    auto p_index = [&](int e) {
        return int(std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
    };
    for (const Block& b : skel.blocks) {
        S.eta0.push_back(p_index(b.lo));
        S.eta1.push_back(p_index(b.hi));
    }
    for (auto [a, b] : S.P.covers())
        S.w[{a, b}] = interval(L, elems[a], elems[b]).length();
    validate_wds(S);
    return S;
}

inline WeightedDoubleSkeleton extract_wds(const FiniteLattice& L) {
    return extract_wds(L, skeleton(L));
}

/// Extended weight w*(x,y): the common weight sum over all maximal chains
/// from x to y in P; 0 when x = y or x is not below y. Every maximal
/// chain is evaluated; disagreement raises ChainDependentWeight.
inline long long extended_weight(const WeightedDoubleSkeleton& S, int x, int y) {
    if (x == y || !S.P.lt(x, y)) return 0;
    // Cover successors inside [x,y].
    std::optional<long long> agreed;
    std::vector<std::pair<int, long long>> stack{{x, 0}};
    std::vector<std::vector<int>> succ(S.P.n);
    for (auto& [e, wt] : S.w)
        if (S.P.leq(x, e.first) && S.P.leq(e.second, y)) succ[e.first].push_back(e.second);
    while (!stack.empty()) {
        auto [z, acc] = stack.back();
        stack.pop_back();
        if (z == y) {
            if (agreed && *agreed != acc)
                throw ChainDependentWeight("maximal chains from " + std::to_string(x) +
                                           " to " + std::to_string(y) + " disagree");
            agreed = acc;
            continue;
        }
        for (int nz : succ[z]) stack.emplace_back(nz, acc + S.w.at({z, nz}));
    }
    return *agreed;
}

/// The signed Mobius-weighted sum over lower blocks; equals |J_alpha| when
/// S came from a distributive lattice. Never clamped.
inline long long j_alpha_count(const WeightedDoubleSkeleton& S, int alpha) {
    MobiusTable mu(S.K.poset);
    long long total = 0;
    for (int beta = 0; beta < S.K.size(); ++beta)
        if (S.K.leq(beta, alpha))
            total += mu(beta, alpha) * extended_weight(S, S.eta0[alpha], S.eta1[beta]);
    return total;
}

/// J_alpha taken directly in L: join-irreducibles inside the block, its
/// lower endpoint excluded. For modular L these are atoms of the block.
inline Bitset j_alpha_set(const FiniteLattice& L, const SkeletonResult& skel, int alpha) {
    Bitset s = join_irreducibles(L) & skel.blocks[alpha].members;
    s.reset(skel.blocks[alpha].lo);
    return s;
}

/// Atoms of L below the lower endpoint of a non-least block.
inline Bitset dominated_atoms(const FiniteLattice& L, const SkeletonResult& skel,
                              int alpha) {
    if (alpha == skel.zeta0) throw IsZeta0("dom is undefined on the least block");
    return atoms(L) & L.poset.dn[skel.blocks[alpha].lo];
}

/// Number of elements with exactly k lower covers in the sublattice
/// [0_alpha, 1_beta]; 0 when the blocks do not intersect.
inline int jk_count_in(const FiniteLattice& L, const SkeletonResult& skel, int alpha,
                       int beta, int k) {
    int lo = skel.blocks[alpha].lo, hi = skel.blocks[beta].hi;
    if (!L.leq(lo, hi)) return 0;
    return jk_count(interval(L, lo, hi), k);
}

/// Searches lattice isomorphisms kappa of the skeletons; each induces a
/// candidate psi on P which must be well-defined, bijective, an order
/// isomorphism, and weight-preserving.
inline std::optional<WdsIsomorphism> wds_isomorphic(const WeightedDoubleSkeleton& A,
                                                    const WeightedDoubleSkeleton& B) {
    if (A.P.n != B.P.n || A.K.size() != B.K.size()) return std::nullopt;
    std::optional<WdsIsomorphism> found;
    enumerate_isomorphisms(A.K.poset, B.K.poset, [&](const std::vector<int>& kappa) {
        std::vector<int> psi(A.P.n, -1);
        for (int x = 0; x < A.K.size(); ++x) {
            int t0 = B.eta0[kappa[x]], t1 = B.eta1[kappa[x]];
            if (psi[A.eta0[x]] != -1 && psi[A.eta0[x]] != t0) return false;
            psi[A.eta0[x]] = t0;
            if (psi[A.eta1[x]] != -1 && psi[A.eta1[x]] != t1) return false;
            psi[A.eta1[x]] = t1;
        }
        std::vector<char> used(B.P.n, 0);
        for (int p = 0; p < A.P.n; ++p) {
            if (psi[p] < 0 || used[psi[p]]) return false;
            used[psi[p]] = 1;
        }
        for (int p = 0; p < A.P.n; ++p)
            for (int q = 0; q < A.P.n; ++q)
                if (A.P.leq(p, q) != B.P.leq(psi[p], psi[q])) return false;
        for (auto& [e, wt] : A.w)
            if (B.w.at({psi[e.first], psi[e.second]}) != wt) return false;
        found = WdsIsomorphism{psi, kappa};
        return true;
    });
    return found;
}

/// WDS JSON, field names fixed by the file format.
inline nlohmann::json wds_to_json(const WeightedDoubleSkeleton& S) {
    nlohmann::json j;
    auto covers_of = [](const Poset& p) {
        nlohmann::json arr = nlohmann::json::array();
        auto cs = p.covers();
        std::sort(cs.begin(), cs.end());
        for (auto [a, b] : cs) arr.push_back({a, b});
        return arr;
    };
    j["P"] = {{"n", S.P.n}, {"covers", covers_of(S.P)}};
    j["K"] = {{"n", S.K.size()}, {"covers", covers_of(S.K.poset)}};
    j["eta0"] = S.eta0;
    j["eta1"] = S.eta1;
    nlohmann::json warr = nlohmann::json::array();
    for (auto& [e, wt] : S.w) warr.push_back({e.first, e.second, wt});
    j["w"] = warr;
    return j;
}

inline WeightedDoubleSkeleton wds_from_json(const nlohmann::json& j) {
    WeightedDoubleSkeleton S;
    auto read_covers = [](const nlohmann::json& v) {
        std::vector<std::pair<int, int>> cs;
        for (auto& e : v) cs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return cs;
    };
    try {
        S.P = Poset::from_covers(j.at("P").at("n").get<int>(),
                                 read_covers(j.at("P").at("covers")));
        S.K = build_lattice(j.at("K").at("n").get<int>(),
                            read_covers(j.at("K").at("covers")));
        S.eta0 = j.at("eta0").get<std::vector<int>>();
        S.eta1 = j.at("eta1").get<std::vector<int>>();
        for (auto& e : j.at("w"))
            S.w[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<int>();
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidWds(std::string("malformed WDS JSON: ") + ex.what());
    }
    validate_wds(S);
    return S;
}

} // namespace latskel

#endif
