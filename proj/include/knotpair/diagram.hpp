#ifndef KNOTPAIR_DIAGRAM_HPP
#define KNOTPAIR_DIAGRAM_HPP

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kp {

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One crossing in role-normalized form: beta is the over-arc and the coloring
// relation C(gamma) = M_beta (C(alpha) - C(beta)) + C(beta) holds at every
// crossing regardless of sign. Relative to the raw planar data this swaps the
// two under-strand roles at negative crossings, so the under-strand enters at
// alpha for sign +1 and at gamma for sign -1.
struct Crossing {
    int alpha = 0, beta = 0, gamma = 0;
    int sign = +1;
    friend bool operator==(const Crossing& a, const Crossing& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma && a.sign == b.sign;
    }
};

struct KnotDiagram {
    std::vector<std::string> arcs; // labels; arc index = position
    std::vector<Crossing> crossings;
    std::string name;

    int narcs() const { return (int)arcs.size(); }

    int under_in(const Crossing& c) const { return c.sign > 0 ? c.alpha : c.gamma; }
    int under_out(const Crossing& c) const { return c.sign > 0 ? c.gamma : c.alpha; }

    // structural checks: one crossing per arc end, single component
    void validate() const {
        if (crossings.empty()) throw DiagramError("diagram has no crossings");
        if (arcs.size() != crossings.size())
            throw DiagramError("arc count " + std::to_string(arcs.size()) +
                               " != crossing count " + std::to_string(crossings.size()));
        int n = narcs();
        std::vector<int> out_count(n, 0), in_count(n, 0), succ(n, -1);
        for (const auto& c : crossings) {
            for (int a : {c.alpha, c.beta, c.gamma})
                if (a < 0 || a >= n) throw DiagramError("arc index out of range");
            ++out_count[under_out(c)];
            ++in_count[under_in(c)];
            succ[under_in(c)] = under_out(c);
        }
        for (int a = 0; a < n; ++a) {
            if (out_count[a] != 1)
                throw DiagramError("arc '" + arcs[a] + "' is the outgoing under-strand of " +
                                   std::to_string(out_count[a]) + " crossings (want 1)");
            if (in_count[a] != 1)
                throw DiagramError("arc '" + arcs[a] + "' is the incoming under-strand of " +
                                   std::to_string(in_count[a]) + " crossings (want 1)");
        }
        int seen = 0, cur = 0;
        do {
            cur = succ[cur];
            ++seen;
        } while (cur != 0 && seen <= n);
        if (seen != n) throw DiagramError("diagram is not a single closed component");
    }

    int writhe() const {
        int w = 0;
        for (const auto& c : crossings) w += c.sign;
        return w;
    }
};

// ---- planar-diagram code: PD[X(a,b,c,d), ...] ----
//
// Edges are numbered 1..2n along the orientation. In X(a,b,c,d) the strand
// enters under at edge a and leaves at edge c; b and d are the over-strand
// edges, with the crossing positive when the over-strand runs d -> b
// (b = d + 1 mod 2n) and negative when it runs b -> d.
inline KnotDiagram parse_pd(const std::string& text) {
    std::vector<std::array<int, 4>> tuples;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    if (text.compare(i, 3, "PD[") != 0) throw DiagramError("input does not start with PD[");
    i += 3;
    bool first_tuple = true;
    while (true) {
        skip_ws();
        if (i < text.size() && text[i] == ']') break;
        if (!first_tuple) {
            if (i >= text.size() || text[i] != ',')
                throw DiagramError("expected ',' between crossing tuples");
            ++i;
            skip_ws();
        }
        first_tuple = false;
        if (text.compare(i, 2, "X(") != 0)
            throw DiagramError("malformed crossing tuple at offset " + std::to_string(i));
        i += 2;
        std::array<int, 4> tup{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            if (j == i) throw DiagramError("malformed crossing tuple: expected edge number");
            tup[k] = std::stoi(text.substr(i, j - i));
            i = j;
            skip_ws();
            char want = (k < 3) ? ',' : ')';
            if (i >= text.size() || text[i] != want)
                throw DiagramError(std::string("malformed crossing tuple: expected '") + want + "'");
            ++i;
        }
        tuples.push_back(tup);
    }
    if (tuples.empty()) throw DiagramError("empty planar-diagram code");
    int n = (int)tuples.size(), ne = 2 * n;
    std::vector<int> edge_uses(ne + 1, 0);
    for (const auto& t : tuples)
        for (int e : t) {
            if (e < 1 || e > ne)
                throw DiagramError("edge label " + std::to_string(e) + " out of range 1.." +
                                   std::to_string(ne));
            ++edge_uses[e];
        }
    for (int e = 1; e <= ne; ++e)
        if (edge_uses[e] != 2)
            throw DiagramError("edge " + std::to_string(e) + " used " +
                               std::to_string(edge_uses[e]) + " times (want 2)");
    // arcs: union of edges joined across over-passes
    std::vector<int> parent(ne + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& t : tuples) parent[find(t[1])] = find(t[3]);
    std::map<int, int> arcidx;
    std::vector<std::string> arcs;
    for (int e = 1; e <= ne; ++e) {
        int r = find(e);
        if (!arcidx.count(r)) {
            arcidx[r] = (int)arcs.size();
            arcs.push_back(std::to_string(r));
        }
    }
    KnotDiagram D;
    D.arcs = std::move(arcs);
    auto arc = [&](int e) { return arcidx.at(find(e)); };
    for (const auto& t : tuples) {
        int a = t[0], b = t[1], c = t[2], d = t[3];
        int sign;
        if ((b - d) % ne == 1 || (b - d) % ne == 1 - ne)
            sign = +1;
        else if ((d - b) % ne == 1 || (d - b) % ne == 1 - ne)
            sign = -1;
        else
            throw DiagramError("inconsistent orientation: over-strand edges " + std::to_string(b) +
                               "," + std::to_string(d) + " not adjacent");
        Crossing cr;
        cr.sign = sign;
        cr.beta = arc(b);
        if (sign > 0) {
            cr.alpha = arc(a);
            cr.gamma = arc(c);
        } else {
            cr.alpha = arc(c);
            cr.gamma = arc(a);
        }
        D.crossings.push_back(cr);
    }
    D.validate();
    return D;
}

// ---- crossing relation list: one line `a < b -> c : s` per crossing ----
inline KnotDiagram parse_xrl(const std::string& text) {
    KnotDiagram D;
    std::map<std::string, int> idx;
    auto arc_of = [&](const std::string& s) {
        auto it = idx.find(s);
        if (it != idx.end()) return it->second;
        int k = (int)D.arcs.size();
        idx[s] = k;
        D.arcs.push_back(s);
        return k;
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string a, lt, b, arrow, c, colon, s;
        if (!(ls >> a)) continue; // blank
        if (!(ls >> lt >> b >> arrow >> c >> colon >> s) || lt != "<" || arrow != "->" ||
            colon != ":" || (s != "+" && s != "-"))
            throw DiagramError("malformed relation on line " + std::to_string(lineno) + ": '" +
                               line + "'");
        std::string extra;
        if (ls >> extra)
            throw DiagramError("trailing text on line " + std::to_string(lineno));
        Crossing cr;
        cr.alpha = arc_of(a);
        cr.beta = arc_of(b);
        cr.gamma = arc_of(c);
        cr.sign = (s == "+") ? +1 : -1;
        D.crossings.push_back(cr);
    }
    D.validate();
    return D;
}

// Closure of the m-strand braid (s_1 s_2 ... s_{m-1})^n, all crossings
// positive; a knot exactly when gcd(m,n) = 1.
inline KnotDiagram torus_diagram(int m, int n) {
    if (m < 2 || n < 2) throw DiagramError("torus parameters must be >= 2");
    if (std::gcd(m, n) != 1)
        throw DiagramError("gcd(" + std::to_string(m) + "," + std::to_string(n) +
                           ") != 1: closure is a link, not a knot");
    std::vector<int> cur(m);
    std::iota(cur.begin(), cur.end(), 0);
    int nextid = m;
    std::vector<std::array<int, 3>> raw; // (under_in, over, under_out), all positive
    for (int rep = 0; rep < n; ++rep)
        for (int i = 0; i + 1 < m; ++i) {
            int over = cur[i], under = cur[i + 1], fresh = nextid++;
            raw.push_back({under, over, fresh});
            cur[i] = fresh;
            cur[i + 1] = over;
        }
    // closure: strand ends rejoin the starting arcs
    std::vector<int> parent(nextid);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i) parent[find(cur[i])] = find(i);
    KnotDiagram D;
    D.name = "T(" + std::to_string(m) + "," + std::to_string(n) + ")";
    std::map<int, int> remap;
    auto rm = [&](int x) {
        int r = find(x);
        auto it = remap.find(r);
        if (it != remap.end()) return it->second;
        int k = (int)D.arcs.size();
        remap[r] = k;
        D.arcs.push_back(std::to_string(r));
        return k;
    };
    for (int i = 0; i < m; ++i) rm(i); // braid start arcs come first
    for (const auto& r : raw) D.crossings.push_back({rm(r[0]), rm(r[1]), rm(r[2]), +1});
    D.validate();
    return D;
}

// Rebuild a PD code. The order of a single arc's over-passes is not part of the
// combinatorial data, so any choice reparses to the same diagram; crossing
// order and signs survive exactly.
inline std::string print_pd(const KnotDiagram& D) {
    D.validate();
    int n = (int)D.crossings.size(), ne = 2 * n;
    std::vector<int> in_cross(D.narcs(), -1); // crossing where this arc ends (under-in)
    for (int i = 0; i < n; ++i) in_cross[D.under_in(D.crossings[i])] = i;
    // walk the component, numbering edges 1..2n
    std::vector<int> first_edge(D.narcs(), 0), last_edge(D.narcs(), 0);
    std::vector<std::pair<int, int>> over_edges(n, {0, 0}); // per crossing: in, out
    int edge = 1, a = 0;
    for (int step = 0; step < D.narcs(); ++step) {
        first_edge[a] = edge;
        for (int i = 0; i < n; ++i)
            if (D.crossings[i].beta == a) {
                over_edges[i] = {edge, edge == ne ? 1 : edge + 1};
                ++edge;
            }
        last_edge[a] = edge;
        ++edge;
        a = D.under_out(D.crossings[in_cross[a]]);
    }
    std::ostringstream os;
    os << "PD[";
    for (int i = 0; i < n; ++i) {
        const Crossing& c = D.crossings[i];
        int ein = last_edge[D.under_in(c)];
        int eout = first_edge[D.under_out(c)];
        auto [oin, oout] = over_edges[i];
        int b = c.sign > 0 ? oout : oin;
        int d = c.sign > 0 ? oin : oout;
        if (i) os << ", ";
        os << "X(" << ein << "," << b << "," << eout << "," << d << ")";
    }
    os << "]";
    return os.str();
}

// Canonical label-free encoding: arcs renumbered by traversal order from the
// rotation giving the lexicographically least crossing list. Two diagrams are
// the same up to arc relabeling iff their codes match.
inline std::string canonical_code(const KnotDiagram& D) {
    D.validate();
    int n = D.narcs();
    std::vector<int> succ(n, -1);
    for (const auto& c : D.crossings) succ[D.under_in(c)] = D.under_out(c);
    std::string best;
    for (int start = 0; start < n; ++start) {
        std::vector<int> rel(n, -1);
        int a = start;
        for (int k = 0; k < n; ++k) {
            rel[a] = k;
            a = succ[a];
        }
        std::vector<std::string> lines;
        for (const auto& c : D.crossings) {
            std::ostringstream os;
            os << rel[c.alpha] << "," << rel[c.beta] << "," << rel[c.gamma] << ","
               << (c.sign > 0 ? "+" : "-");
            lines.push_back(os.str());
        }
        std::sort(lines.begin(), lines.end());
        std::string code;
        for (const auto& l : lines) code += l + ";";
        if (best.empty() || code < best) best = code;
    }
    return best;
}

inline bool same_diagram(const KnotDiagram& A, const KnotDiagram& B) {
    return canonical_code(A) == canonical_code(B);
}

} // namespace kp

#endif
