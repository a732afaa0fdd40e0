#ifndef LATSKEL_TEXTIO_HPP
#define LATSKEL_TEXTIO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "latskel/lattice.hpp"

namespace latskel {

struct LatticeFile {
    std::string name;
    int n = 0;
    std::vector<std::pair<int, int>> covers;
};

/// Line-based lattice text format:
///
///   lattice <name>
///   elements <n>
///   covers
///   <a> <b>
///   end
///
/// `#` starts a comment; blank lines are ignored.
inline LatticeFile parse_lattice_text(std::istream& in) {
    LatticeFile f;
    std::string raw;
    int lineno = 0;
    enum { HEAD, ELEMS, COVERS, DONE } state = HEAD;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        switch (state) {
        case HEAD:
            if (tok != "lattice") throw ParseError(lineno, "expected 'lattice <name>'");
            if (!(ls >> f.name)) throw ParseError(lineno, "missing lattice name");
            state = ELEMS;
            break;
        case ELEMS:
            if (tok != "elements") throw ParseError(lineno, "expected 'elements <n>'");
            if (!(ls >> f.n) || f.n < 0) throw ParseError(lineno, "bad element count");
            state = COVERS;
            break;
        case COVERS:
            if (tok == "covers") break;
            if (tok == "end") {
                state = DONE;
                break;
            }
            {
                int a, b;
                std::istringstream ps(line);
                if (!(ps >> a >> b)) throw ParseError(lineno, "malformed cover line");
                if (a < 0 || a >= f.n || b < 0 || b >= f.n)
                    throw ParseError(lineno, "cover element out of range 0.." +
                                                 std::to_string(f.n - 1));
                f.covers.emplace_back(a, b);
            }
            break;
        case DONE:
            throw ParseError(lineno, "trailing content after 'end'");
        }
    }
    if (state != DONE) throw ParseError(lineno, "unexpected end of input");
    return f;
}

inline FiniteLattice read_lattice(std::istream& in, std::string* name = nullptr) {
    LatticeFile f = parse_lattice_text(in);
    if (name) *name = f.name;
    return build_lattice(f.n, f.covers);
}

inline void write_lattice(std::ostream& out, const FiniteLattice& L,
                          const std::string& name) {
    out << "lattice " << name << "\n";
    out << "elements " << L.size() << "\n";
    out << "covers\n";
    for (auto [a, b] : L.covers) out << a << " " << b << "\n";
    out << "end\n";
}

inline std::string lattice_to_string(const FiniteLattice& L, const std::string& name) {
    std::ostringstream os;
    write_lattice(os, L, name);
    return os.str();
}

/// Hasse diagram in DOT, ranked by height (bottom at the bottom).
/// `edge_labels`, when nonempty, must be indexed like `covers`.
inline void write_dot(std::ostream& out, const Poset& P, const std::string& name,
                      const std::vector<int>& edge_labels = {}) {
    std::vector<std::pair<int, int>> cs = P.covers();
    std::sort(cs.begin(), cs.end());
    std::vector<int> h = P.heights();
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=BT;\n  node [shape=circle];\n";
    int maxh = 0;
    for (int x : h) maxh = std::max(maxh, x);
    for (int lvl = 0; lvl <= maxh; ++lvl) {
        out << "  { rank=same;";
        for (int i = 0; i < P.n; ++i)
            if (h[i] == lvl) out << " " << i << ";";
        out << " }\n";
    }
    for (std::size_t e = 0; e < cs.size(); ++e) {
        out << "  " << cs[e].first << " -> " << cs[e].second;
        if (e < edge_labels.size()) out << " [label=\"" << edge_labels[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace latskel

#endif
