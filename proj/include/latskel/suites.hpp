#ifndef LATSKEL_SUITES_HPP
#define LATSKEL_SUITES_HPP

#include <chrono>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "latskel/enumerate.hpp"
#include "latskel/reconstruct.hpp"
#include "latskel/textio.hpp"

namespace latskel {

struct SuiteBounds {
    int max_ji = -1;   // -1: per-suite default
    int max_size = -1; // -1: per-suite default
    int jobs = 1;
    unsigned seed = 2026;
};

struct SuiteFailure {
    std::string what;
    std::string witness; // lattice text format when a lattice is at fault
};

struct SuiteReport {
    std::string suite;
    long long instances = 0;
    std::vector<SuiteFailure> failures;
    double seconds = 0;

    bool passed() const { return failures.empty(); }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "theorem-a",   "theorem-b",       "theorem-c", "lemma-31",
        "lemma-blocks", "lemma-bipartite", "reuter-k2", "length-drop"};
    return names;
}

namespace detail {

/// Runs `check` over the instances, splitting across `jobs` threads.
/// Failures keep instance order, so reports are deterministic.
template <typename T, typename Check>
void run_instances(const std::vector<T>& items, int jobs, const Check& check,
                   SuiteReport& rep) {
    rep.instances += static_cast<long long>(items.size());
    if (jobs < 2 || items.size() < 32) {
        for (const T& it : items) check(it, rep.failures);
        return;
    }
    std::vector<std::vector<std::pair<std::size_t, SuiteFailure>>> parts(jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < items.size(); i += jobs) {
                std::vector<SuiteFailure> fs;
                check(items[i], fs);
                for (SuiteFailure& f : fs) parts[t].emplace_back(i, std::move(f));
            }
        });
    for (auto& th : threads) th.join();
    std::vector<std::pair<std::size_t, SuiteFailure>> merged;
    for (auto& p : parts)
        for (auto& e : p) merged.push_back(std::move(e));
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, f] : merged) rep.failures.push_back(std::move(f));
}

inline std::vector<FiniteLattice> lattices_up_to(int max_size) {
    std::vector<FiniteLattice> out;
    for (int n = 1; n <= max_size; ++n)
        for (FiniteLattice& L : enumerate_lattices(n)) out.push_back(std::move(L));
    return out;
}

inline std::string witness(const FiniteLattice& L) {
    return lattice_to_string(L, "witness");
}

/// The structural-lemma battery for one lattice; modular-only lemmas are
/// applied under their hypothesis.
inline void check_blocks(const FiniteLattice& L, std::vector<SuiteFailure>& fs) {
    auto fail = [&](const std::string& what) { fs.push_back({what, witness(L)}); };
    if (L.size() < 2) return;
    SkeletonResult s = skeleton(L);
    const FiniteLattice& S = s.skeleton;
    if (S.length() >= L.length()) fail("skeleton length did not drop");
    int m = S.size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int jj = S.join(i, j), mm = S.meet(i, j);
            if (L.join(s.blocks[i].lo, s.blocks[j].lo) != s.blocks[jj].lo ||
                L.meet(s.blocks[i].hi, s.blocks[j].hi) != s.blocks[mm].hi)
                fail("block endpoint arithmetic violated");
            if (!L.leq(L.join(s.blocks[i].hi, s.blocks[j].hi), s.blocks[jj].hi) ||
                !L.leq(s.blocks[mm].lo, L.meet(s.blocks[i].lo, s.blocks[j].lo)))
                fail("block endpoint inequality violated");
            if (S.leq(i, j) != L.leq(s.blocks[i].lo, s.blocks[j].lo) ||
                S.leq(i, j) != L.leq(s.blocks[i].hi, s.blocks[j].hi))
                fail("block order disagrees with endpoint order");
        }
    for (auto [i, j] : S.covers)
        if (!s.blocks[i].members.intersects(s.blocks[j].members))
            fail("consecutive blocks are disjoint");
    Tolerance thetaS = skeleton_tolerance(S);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (thetaS.contains(i, j) &&
                !s.blocks[i].members.intersects(s.blocks[j].members))
                fail("tolerance-related blocks are disjoint");
    if (is_modular(L)) {
        Bitset ji = join_irreducibles(L);
        Bitset seen(L.size());
        for (int a = 0; a < m; ++a) {
            Bitset ja = j_alpha_set(L, s, a);
            if (ja.intersects(seen)) fail("block join-irreducibles overlap");
            seen |= ja;
        }
        if (!(seen == ji)) fail("blocks do not partition the join-irreducibles");
        int z = L.bottom;
        atoms(L).for_each([&](int a) { z = L.join(z, a); });
        if (z != s.blocks[s.zeta0].hi) fail("join of atoms misses the least block top");
    }
}

inline BipartiteGraph random_bipartite(std::mt19937& rng) {
    int u = 1 + int(rng() % 6), x = 1 + int(rng() % 8);
    BipartiteGraph g = BipartiteGraph::make(u, x);
    for (int v = 0; v < u; ++v)
        for (int i = 0; i < x; ++i)
            if (rng() % 2) g.adj[v].set(i);
    return g;
}

} // namespace detail

inline SuiteReport run_suite(const std::string& name, SuiteBounds bounds = {}) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = name;
    int max_ji = bounds.max_ji;
    int max_size = bounds.max_size;

    if (name == "theorem-a") {
        if (max_size < 0) max_size = 8;
        detail::run_instances(
            detail::lattices_up_to(max_size), bounds.jobs,
            [](const FiniteLattice& L, std::vector<SuiteFailure>& fs) {
                if (is_modular(L) && is_h_irreducible(L, 2) && ji_length(L) > 1)
                    fs.push_back({"modular H2-irreducible lattice with long ji poset",
                                  detail::witness(L)});
            },
            rep);
    } else if (name == "theorem-b") {
        if (max_ji < 0) max_ji = 5;
        std::vector<FiniteLattice> uni;
        for (FiniteLattice& L : enumerate_distributive(max_ji))
            if (is_h_irreducible(L, 2)) uni.push_back(std::move(L));
        std::vector<WeightedDoubleSkeleton> wds;
        for (const FiniteLattice& L : uni) wds.push_back(extract_wds(L));
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < uni.size(); ++i)
            for (std::size_t j = i + 1; j < uni.size(); ++j)
                pairs.emplace_back(int(i), int(j));
        detail::run_instances(
            pairs, bounds.jobs,
            [&](const std::pair<int, int>& p, std::vector<SuiteFailure>& fs) {
                auto [i, j] = p;
                if (wds_isomorphic(wds[i], wds[j]).has_value() &&
                    !are_isomorphic(uni[i], uni[j]).has_value())
                    fs.push_back({"H2-irreducible pair with equal skeleton data is "
                                  "not isomorphic",
                                  detail::witness(uni[i]) + detail::witness(uni[j])});
            },
            rep);
    } else if (name == "theorem-c") {
        if (max_ji < 0) max_ji = 5;
        std::vector<FiniteLattice> uni;
        for (FiniteLattice& L : enumerate_distributive(max_ji))
            if (ji_length(L) <= 1) uni.push_back(std::move(L));
        detail::run_instances(
            uni, bounds.jobs,
            [](const FiniteLattice& L, std::vector<SuiteFailure>& fs) {
                try {
                    ReconstructionReport r = reconstruct(extract_wds(L));
                    if (!are_isomorphic(r.lattice, L).has_value())
                        fs.push_back({"round trip produced a different lattice",
                                      detail::witness(L)});
                } catch (const Error& e) {
                    fs.push_back({std::string("round trip raised ") + e.name(),
                                  detail::witness(L)});
                }
            },
            rep);
    } else if (name == "lemma-31") {
        if (max_size < 0) max_size = 12;
        detail::run_instances(
            enumerate_distributive_by_size(max_size), bounds.jobs,
            [](const FiniteLattice& L, std::vector<SuiteFailure>& fs) {
                SkeletonResult s = skeleton(L);
                WeightedDoubleSkeleton S = extract_wds(L, s);
                for (int a = 0; a < S.K.size(); ++a)
                    if (j_alpha_count(S, a) != j_alpha_set(L, s, a).count())
                        fs.push_back({"count formula disagrees with the direct count "
                                      "on block " + std::to_string(a),
                                      detail::witness(L)});
            },
            rep);
    } else if (name == "lemma-blocks") {
        if (max_size < 0) max_size = 7;
        if (max_ji < 0) max_ji = 5;
        detail::run_instances(detail::lattices_up_to(max_size), bounds.jobs,
                              detail::check_blocks, rep);
        std::vector<FiniteLattice> extra;
        for (FiniteLattice& L : enumerate_distributive(max_ji))
            if (L.size() > max_size) extra.push_back(std::move(L));
        detail::run_instances(extra, bounds.jobs, detail::check_blocks, rep);
    } else if (name == "lemma-bipartite") {
        std::mt19937 rng(bounds.seed);
        std::vector<BipartiteGraph> graphs;
        std::vector<std::vector<int>> shuffles_u, shuffles_x;
        for (int t = 0; t < 500; ++t) {
            graphs.push_back(detail::random_bipartite(rng));
            std::vector<int> pu(graphs.back().u), px(graphs.back().x);
            std::iota(pu.begin(), pu.end(), 0);
            std::iota(px.begin(), px.end(), 0);
            std::shuffle(pu.begin(), pu.end(), rng);
            std::shuffle(px.begin(), px.end(), rng);
            shuffles_u.push_back(pu);
            shuffles_x.push_back(px);
        }
        std::vector<int> idx(graphs.size());
        std::iota(idx.begin(), idx.end(), 0);
        detail::run_instances(
            idx, bounds.jobs,
            [&](int t, std::vector<SuiteFailure>& fs) {
                const BipartiteGraph& g = graphs[t];
                auto fail = [&](const std::string& w) {
                    fs.push_back({w + " on seeded graph " + std::to_string(t), ""});
                };
                std::vector<long long> sigma = strong_from_domination(
                    g.u, [&](DominationQuery q) { return domination(g, q); });
                long long total = 0;
                std::vector<long long> eps = exact_from_strong(g.u, sigma);
                for (std::uint32_t m = 0; m < (1u << g.u); ++m) {
                    if (sigma[m] != strong_domination(g, m))
                        fail("sigma recovery mismatch");
                    if (eps[m] != exact_domination(g, m))
                        fail("epsilon recovery mismatch");
                    total += eps[m];
                }
                if (total != g.x) fail("exact classes do not partition X");
                // relabeled copy: phi must complete to an isomorphism
                const std::vector<int>&pu = shuffles_u[t], &px = shuffles_x[t];
                BipartiteGraph h = BipartiteGraph::make(g.u, g.x);
                for (int v = 0; v < g.u; ++v)
                    g.adj[v].for_each([&](int xx) { h.adj[pu[v]].set(px[xx]); });
                auto iso = complete_isomorphism(g, h, pu);
                if (!iso.has_value())
                    fail("relabeling-induced map was rejected");
                else
                    for (int v = 0; v < g.u; ++v)
                        for (int xx = 0; xx < g.x; ++xx)
                            if (g.adj[v].test(xx) !=
                                h.adj[iso->first[v]].test(iso->second[xx]))
                                fail("returned map is not an isomorphism");
                // a map that breaks some singleton domination must be rejected
                if (g.u >= 2)
                    for (int v = 1; v < g.u; ++v)
                        if (g.adj[v].count() != g.adj[0].count()) {
                            std::vector<int> bad(pu);
                            std::swap(bad[0], bad[v]);
                            for (int w = 0; w < g.u; ++w)
                                if (w != 0 && w != v) bad[w] = pu[w];
                            if (complete_isomorphism(g, h, bad).has_value())
                                fail("degree-breaking map was accepted");
                            break;
                        }
            },
            rep);
    } else if (name == "reuter-k2") {
        if (max_size < 0) max_size = 8;
        std::vector<FiniteLattice> uni;
        for (FiniteLattice& L : detail::lattices_up_to(max_size))
            if (is_modular(L)) uni.push_back(std::move(L));
        detail::run_instances(
            uni, bounds.jobs,
            [](const FiniteLattice& L, std::vector<SuiteFailure>& fs) {
                SkeletonResult s = skeleton(L);
                MobiusTable mu(s.skeleton.poset);
                int m = int(s.blocks.size());
                for (int k = 1; k <= 2; ++k)
                    for (int a = 0; a < m; ++a) {
                        std::vector<int> blk;
                        FiniteLattice alpha =
                            interval(L, s.blocks[a].lo, s.blocks[a].hi, &blk);
                        long long direct = 0;
                        for (int i = 0; i < alpha.size(); ++i)
                            if (alpha.lower_cover_count(i) == k &&
                                L.lower_cover_count(blk[i]) == k)
                                ++direct;
                        long long formula = 0;
                        for (int b = 0; b < m; ++b)
                            if (s.skeleton.leq(b, a))
                                formula += mu(b, a) * jk_count_in(L, s, a, b, k);
                        if (direct != formula)
                            fs.push_back({"identity fails for k=" + std::to_string(k) +
                                          " block " + std::to_string(a),
                                          detail::witness(L)});
                    }
            },
            rep);
    } else if (name == "length-drop") {
        if (max_size < 0) max_size = 7;
        std::vector<FiniteLattice> uni;
        for (FiniteLattice& L : detail::lattices_up_to(max_size))
            if (L.size() > 1) uni.push_back(std::move(L));
        detail::run_instances(
            uni, bounds.jobs,
            [](const FiniteLattice& L, std::vector<SuiteFailure>& fs) {
                if (skeleton(L).skeleton.length() >= L.length())
                    fs.push_back({"skeleton length did not drop", detail::witness(L)});
                if (herrmann_rank(L) > L.length())
                    fs.push_back({"rank exceeds the length", detail::witness(L)});
            },
            rep);
    } else {
        throw UnknownSuite("no suite named '" + name + "'");
    }

    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline std::vector<SuiteReport> run_all_suites(SuiteBounds bounds = {}) {
    std::vector<SuiteReport> reps;
    for (const std::string& n : suite_names()) reps.push_back(run_suite(n, bounds));
    return reps;
}

struct Rank3Pair {
    FiniteLattice first;
    FiniteLattice second;
    int ji_bound = 0; // |Ji| at which the pair was found
};

/// Scans distributive lattices by ascending |Ji| for two non-isomorphic
/// rank-3 lattices with isomorphic weighted double skeletons.
inline std::optional<Rank3Pair> search_rank3_counterexample(int max_ji) {
    for (int k = 0; k <= max_ji; ++k) {
        std::vector<FiniteLattice> cand;
        std::vector<WeightedDoubleSkeleton> wds;
        for (const Poset& p : enumerate_posets(k, std::max(k, 7))) {
            FiniteLattice L = downset_lattice(p);
            if (herrmann_rank(L) != 3) continue;
            wds.push_back(extract_wds(L));
            cand.push_back(std::move(L));
        }
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (cand[i].size() != cand[j].size()) continue;
                if (!wds_isomorphic(wds[i], wds[j]).has_value()) continue;
                if (are_isomorphic(cand[i], cand[j]).has_value()) continue;
                return Rank3Pair{std::move(cand[i]), std::move(cand[j]), k};
            }
    }
    return std::nullopt;
}

/// First distributive lattice with ji length <= 1 whose rank is >= 3,
/// by ascending |Ji|.
inline std::optional<FiniteLattice> search_ji1_not_h2(int max_ji) {
    for (int k = 0; k <= max_ji; ++k)
        for (const Poset& p : enumerate_posets(k, std::max(k, 7))) {
            if (p.length() > 1) continue;
            FiniteLattice L = downset_lattice(p);
            if (herrmann_rank(L) >= 3) return L;
        }
    return std::nullopt;
}

/// Deterministic text rendering; timing is deliberately excluded so that
/// identical runs are byte-identical.
inline std::string report_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    os << "instances " << r.instances << "\n";
    os << "failures " << r.failures.size() << "\n";
    for (const SuiteFailure& f : r.failures) {
        os << "failure " << f.what << "\n";
        if (!f.witness.empty()) os << f.witness;
    }
    os << "result " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

inline nlohmann::json report_json(const SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["instances"] = r.instances;
    j["result"] = r.passed() ? "PASS" : "FAIL";
    nlohmann::json fs = nlohmann::json::array();
    for (const SuiteFailure& f : r.failures)
        fs.push_back({{"what", f.what}, {"witness", f.witness}});
    j["failures"] = fs;
    return j;
}

} // namespace latskel

#endif
