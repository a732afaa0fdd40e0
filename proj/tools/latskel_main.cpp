#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latskel/reconstruct.hpp"
#include "latskel/suites.hpp"
#include "latskel/textio.hpp"

using namespace latskel;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FiniteLattice load_lattice(const std::string& path, std::string* name = nullptr) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_lattice(in, name);
}

WeightedDoubleSkeleton load_wds(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidWds(std::string("malformed WDS JSON: ") + ex.what());
    }
    return wds_from_json(j);
}

/// All output goes through here so `-o` and stdout behave identically.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-lattice skeleton toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, suite = "all", search_kind;
    int max_ji = -1, max_size = -1, jobs = 1;
    unsigned seed = 2026;
    bool as_json = false;

    auto add_io = [&](CLI::App* c, bool with_out = true) {
        c->add_option("input", in_path, "input file")->required();
        if (with_out) c->add_option("-o,--output", out_path, "output file");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "summarize a lattice file");
    add_io(analyze, false);

    CLI::App* skel = app.add_subcommand("skeleton", "factor by the skeleton tolerance");
    add_io(skel);

    CLI::App* rank = app.add_subcommand("rank", "iterated skeletons and rank");
    add_io(rank, false);

    CLI::App* wds = app.add_subcommand("wds", "extract the weighted double skeleton");
    add_io(wds);

    CLI::App* rec = app.add_subcommand("reconstruct", "rebuild a lattice from WDS JSON");
    add_io(rec);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--max-ji", max_ji, "bound on |Ji| where applicable");
    verify->add_option("--max-size", max_size, "bound on lattice size where applicable");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--seed", seed, "seed for randomized instances");
    verify->add_flag("--json", as_json, "JSON report");

    CLI::App* search = app.add_subcommand("search", "hunt for the documented witnesses");
    search->add_option("kind", search_kind, "rank3 | ji1")->required();
    search->add_option("--max-ji", max_ji, "bound on |Ji|");
    search->add_option("-o,--output", out_path, "output file");

    CLI::App* dot = app.add_subcommand("dot", "Hasse diagram as DOT");
    add_io(dot);

    CLI::App* stats = app.add_subcommand("stats", "lattice size vs WDS size");
    add_io(stats, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            FiniteLattice L = load_lattice(in_path);
            int r = herrmann_rank(L);
            std::ostringstream os;
            os << "n=" << L.size() << " length=" << L.length()
               << " atoms=" << atoms(L).count() << " ji=" << join_irreducibles(L).count()
               << " jiLength=" << ji_length(L) << " distributive=" << yn(is_distributive(L))
               << " rank=" << r << " modular=" << yn(is_modular(L)) << " h1=" << yn(r <= 1)
               << " h2=" << yn(r <= 2) << "\n";
            std::cout << os.str();
        } else if (skel->parsed()) {
            std::string name;
            FiniteLattice L = load_lattice(in_path, &name);
            SkeletonResult s = skeleton(L);
            std::ostringstream os;
            for (std::size_t i = 0; i < s.blocks.size(); ++i)
                os << "# block " << i << ": [" << s.blocks[i].lo << ","
                   << s.blocks[i].hi << "]\n";
            write_lattice(os, s.skeleton, name + "-skeleton");
            emit(out_path, os.str());
        } else if (rank->parsed()) {
            FiniteLattice L = load_lattice(in_path);
            std::vector<FiniteLattice> it = iterated_skeletons(L);
            std::ostringstream os;
            os << "rank " << it.size() - 1 << "\nsizes";
            for (const FiniteLattice& S : it) os << " " << S.size();
            os << "\n";
            std::cout << os.str();
        } else if (wds->parsed()) {
            FiniteLattice L = load_lattice(in_path);
            emit(out_path, wds_to_json(extract_wds(L)).dump(2) + "\n");
        } else if (rec->parsed()) {
            ReconstructionReport r = reconstruct(load_wds(in_path));
            emit(out_path, lattice_to_string(r.lattice, "reconstructed"));
        } else if (verify->parsed()) {
            SuiteBounds b{max_ji, max_size, jobs, seed};
            std::vector<SuiteReport> reps;
            if (suite == "all")
                reps = run_all_suites(b);
            else
                reps.push_back(run_suite(suite, b));
            bool ok = true;
            std::ostringstream os;
            nlohmann::json jarr = nlohmann::json::array();
            for (const SuiteReport& r : reps) {
                ok = ok && r.passed();
                if (as_json)
                    jarr.push_back(report_json(r));
                else
                    os << report_text(r);
                std::cerr << r.suite << ": " << r.seconds << "s\n";
            }
            std::cout << (as_json ? jarr.dump(2) + "\n" : os.str());
            return ok ? 0 : 1;
        } else if (search->parsed()) {
            if (max_ji < 0) max_ji = 8;
            std::ostringstream os;
            if (search_kind == "rank3") {
                std::optional<Rank3Pair> p = search_rank3_counterexample(max_ji);
                if (!p) {
                    std::cout << "absent\n";
                    return 1;
                }
                os << "found-at-ji " << p->ji_bound << "\n";
                write_lattice(os, p->first, "first");
                write_lattice(os, p->second, "second");
            } else if (search_kind == "ji1") {
                std::optional<FiniteLattice> L = search_ji1_not_h2(max_ji);
                if (!L) {
                    std::cout << "absent\n";
                    return 1;
                }
                os << "found rank " << herrmann_rank(*L) << "\n";
                write_lattice(os, *L, "witness");
            } else {
                std::cerr << "error: unknown search kind '" << search_kind << "'\n";
                return 2;
            }
            emit(out_path, os.str());
        } else if (dot->parsed()) {
            std::ostringstream os;
            if (in_path.size() > 5 &&
                in_path.compare(in_path.size() - 5, 5, ".json") == 0) {
                WeightedDoubleSkeleton S = load_wds(in_path);
                std::vector<std::pair<int, int>> cs = S.P.covers();
                std::sort(cs.begin(), cs.end());
                std::vector<int> labels;
                for (auto& e : cs) labels.push_back(S.w.at(e));
                write_dot(os, S.P, "wds", labels);
            } else {
                std::string name;
                FiniteLattice L = load_lattice(in_path, &name);
                write_dot(os, L.poset, name);
            }
            emit(out_path, os.str());
        } else if (stats->parsed()) {
            std::string name;
            FiniteLattice L = load_lattice(in_path, &name);
            std::string text = lattice_to_string(L, name);
            std::string wjson = wds_to_json(extract_wds(L)).dump();
            std::cout << "n=" << L.size() << " ji=" << join_irreducibles(L).count()
                      << " latticeBytes=" << text.size() << " wdsBytes=" << wjson.size()
                      << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
