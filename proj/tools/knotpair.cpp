// command-line front end: parsing, computing, and printing tables or JSON
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotpair/builtin.hpp"
#include "knotpair/cocycle.hpp"
#include "knotpair/seifert.hpp"
#include "knotpair/signature.hpp"
#include "knotpair/talex.hpp"

using json = nlohmann::json;
using namespace kp;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Job {
    std::string diagram_file, builtin, rep = "abelian", modulus, psi = "sesquilinear";
    bool json_out = false;
};

KnotDiagram load_diagram(const Job& j) {
    if (!j.builtin.empty()) return builtin_diagram(j.builtin);
    if (j.diagram_file.empty()) throw std::runtime_error("need --diagram FILE or --builtin NAME");
    std::string text = slurp(j.diagram_file);
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text.compare(p, 2, "PD") == 0) return parse_pd(text);
    return parse_xrl(text);
}

Field field_from_json(const json& js) {
    std::string type = js.at("type");
    Field F;
    if (type == "rational")
        F = NumberField::rationals();
    else if (type == "cyclotomic")
        F = NumberField::cyclotomic(js.at("order").get<int>());
    else
        throw std::runtime_error("unknown field type '" + type + "'");
    if (js.value("trivial_involution", false)) F = with_trivial_involution(F);
    return F;
}

ArcRep load_rep(const Job& j, const KnotDiagram& D) {
    if (j.rep.rfind("builtin:", 0) == 0) return builtin_rep(j.rep.substr(8), D);
    if (j.rep == "abelian") return abelianization_rep(D, NumberField::rationals());
    if (j.rep.size() > 5 && j.rep.substr(j.rep.size() - 5) == ".json") {
        json js = json::parse(slurp(j.rep));
        Field F = field_from_json(js.at("field"));
        int d = js.at("dim");
        std::map<std::string, LMat> seeds;
        for (auto& [arc, rows] : js.at("seeds").items()) {
            LMat M(d, d, Laurent(F));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    M.at(r, c) = parse_laurent(rows.at(r).at(c).get<std::string>(), F);
            seeds.emplace(arc, std::move(M));
        }
        return induced_rep(D, F, seeds);
    }
    return builtin_rep(j.rep, D);
}

PsiForm psi_from(const std::string& name) {
    if (name == "sesquilinear" || name == "sesq") return PsiForm::sesquilinear();
    if (name == "killing") return PsiForm::killing();
    if (name == "hermitian") return PsiForm::hermitian_i();
    throw std::runtime_error("unknown psi family '" + name + "'");
}

Laurent modulus_for(const Job& j, const KnotDiagram& D, const ArcRep& f) {
    if (!j.modulus.empty()) return parse_laurent(j.modulus, f.F);
    return Laurent(twisted_alexander(D, f).display, 0);
}

SeifertMatrix seifert_from(const std::string& spec) {
    if (spec == "trefoil") return {{{-1, 1}, {0, -1}}};
    if (spec == "fig8") return {{{1, 1}, {0, -1}}};
    json js = json::parse(spec);
    SeifertMatrix V;
    for (auto& row : js) {
        std::vector<long> r;
        for (auto& x : row) r.push_back(x.get<long>());
        V.v.push_back(std::move(r));
    }
    V.validate();
    return V;
}

void emit(const Job& j, const json& out, const std::string& text) {
    if (j.json_out)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text;
}

std::string basis_text(const KnotDiagram& D, const ColoringModule& col) {
    std::ostringstream os;
    for (int k = 0; k < col.rank(); ++k) {
        os << "basis[" << k << "]:\n";
        for (int a = 0; a < D.narcs(); ++a) {
            os << "  C(" << D.arcs[a] << ") = (";
            for (int i = 0; i < col.dim; ++i)
                os << (i ? ", " : "") << col.basis[k][col.dim * a + i].str();
            os << ")\n";
        }
    }
    return os.str();
}

int cmd_color(const Job& j) {
    auto D = load_diagram(j);
    auto f = load_rep(j, D);
    try {
        auto col = solve_colorings(D, f, modulus_for(j, D, f));
        json out = {{"command", "color"}, {"rank", col.rank()}};
        std::ostringstream text;
        text << "rank " << col.rank() << " over F[t]/(" << Laurent(col.R->modulus, 0).str()
             << ")\n" << basis_text(D, col);
        json basis = json::array();
        for (int k = 0; k < col.rank(); ++k) {
            json v = json::array();
            for (auto& x : col.basis[k]) v.push_back(x.str());
            basis.push_back(v);
        }
        out["basis"] = basis;
        emit(j, out, text.str());
        return 0;
    } catch (const SnfReport& e) {
        std::ostringstream text;
        text << e.what() << "\n";
        json divs = json::array();
        for (auto& d : e.divisors) {
            text << "  " << Laurent(d, 0).str() << "\n";
            divs.push_back(Laurent(d, 0).str());
        }
        emit(j, {{"command", "color"}, {"error", e.what()}, {"elementary_divisors", divs}},
             text.str());
        return 1;
    }
}

json gram_json(const GramForm& G) {
    json m = json::array();
    for (int i = 0; i < G.Q.n; ++i) {
        json row = json::array();
        for (int k = 0; k < G.Q.m; ++k) row.push_back(G.Q.at(i, k).str());
        m.push_back(row);
    }
    return m;
}

int cmd_pairing(const Job& j) {
    auto D = load_diagram(j);
    auto f = load_rep(j, D);
    auto col = solve_colorings(D, f, modulus_for(j, D, f));
    auto G = gram(D, f, psi_from(j.psi), col);
    std::ostringstream text;
    text << "Q Gram (" << G.Q.n << "x" << G.Q.m << ") mod "
         << Laurent(col.R->modulus, 0).str() << (G.times_i ? ", values times sqrt(-1)" : "")
         << "\n";
    for (int i = 0; i < G.Q.n; ++i)
        for (int k = 0; k < G.Q.m; ++k)
            text << "Q[" << i << "][" << k << "] = " << G.Q.at(i, k).str() << "\n";
    emit(j, {{"command", "pairing"}, {"modulus", Laurent(col.R->modulus, 0).str()},
             {"times_i", G.times_i}, {"gram", gram_json(G)}},
         text.str());
    return 0;
}

int cmd_blanchfield(const Job& j) {
    auto D = load_diagram(j);
    auto f = abelianization_rep(D, NumberField::rationals());
    auto ta = twisted_alexander(D, f);
    Field F = f.F;
    if (ta.display.eval(FE(F, -1L)).is_zero())
        throw std::runtime_error("1 + t is not invertible: order polynomial vanishes at -1");
    auto col = solve_colorings(D, f, Laurent(ta.display, 0));
    std::string mod = Laurent(ta.display, 0).str();
    if (col.rank() == 0) {
        emit(j, {{"command", "blanchfield"}, {"modulus", mod}, {"gram", json::array()}},
             "empty form mod " + mod + "\n");
        return 0;
    }
    auto g = col.normalized_generator(1);
    std::vector<std::vector<QuotElem>> vs = {g};
    for (int k = 1; k < col.rank(); ++k) vs.push_back(col.basis[k]);
    auto B = blanchfield(gram(D, f, PsiForm::sesquilinear(), col, vs));
    std::ostringstream text;
    if (col.rank() == 1)
        text << "Bl(g,g) = " << B.Q.at(0, 0).str() << " mod " << mod << "\n";
    else
        for (int i = 0; i < B.Q.n; ++i)
            for (int k = 0; k < B.Q.m; ++k)
                text << "Bl[" << i << "][" << k << "] = " << B.Q.at(i, k).str() << "\n";
    emit(j, {{"command", "blanchfield"}, {"modulus", mod}, {"gram", gram_json(B)}}, text.str());
    return 0;
}

int cmd_cup(const Job& j) {
    auto D = load_diagram(j);
    auto f = load_rep(j, D);
    auto col = solve_colorings(D, f, modulus_for(j, D, f));
    auto G = gram(D, f, psi_from(j.psi), col);
    std::ostringstream text;
    json m = json::array();
    for (int i = 0; i < G.Q.n; ++i) {
        json row = json::array();
        for (int k = 0; k < G.Q.m; ++k) {
            FE v = trace_map(G.Q.at(i, k));
            text << "TrQ[" << i << "][" << k << "] = " << (G.times_i ? "sqrt(-1) * " : "")
                 << v.str() << "\n";
            row.push_back(v.str());
        }
        m.push_back(row);
    }
    emit(j, {{"command", "cup-product"}, {"times_i", G.times_i}, {"trace_gram", m}}, text.str());
    return 0;
}

int cmd_talex(const Job& j, bool check_rec) {
    auto D = load_diagram(j);
    auto f = load_rep(j, D);
    auto ta = twisted_alexander(D, f);
    std::string disp = Laurent(ta.display, 0).str();
    std::ostringstream text;
    text << disp << "\n";
    json out = {{"command", "twisted-alex"}, {"display", disp},
                {"denominator", Laurent(ta.denom, 0).str()}};
    if (check_rec) {
        bool rec = check_reciprocal(ta.display);
        out["reciprocal"] = rec;
        text << "reciprocal: " << (rec ? "yes" : "no") << "\n";
        auto u = reciprocal_unit(Laurent(ta.display, 0));
        if (u) {
            out["reciprocal_unit"] = {{"a", u->first.str()}, {"N", u->second}};
            text << "Delta = (" << u->first.str() << ") * t^" << u->second
                 << " * bar(Delta)\n";
        }
    }
    emit(j, out, text.str());
    return 0;
}

int cmd_signature(const Job& j, const std::string& wspec, int sweep_n, const std::string& csv) {
    auto D = load_diagram(j);
    auto f = load_rep(j, D);
    auto col = solve_colorings(D, f, modulus_for(j, D, f));
    auto H = hermitian_space(D, f, psi_from(j.psi), col);
    std::ostringstream text;
    json out = {{"command", "cg-signature"}};
    if (!wspec.empty()) {
        std::complex<double> w;
        std::istringstream ws(wspec);
        double a, b = 0;
        char ch;
        ws >> a;
        if (ws >> ch >> b && ch == '-') b = -b;
        w = {a, b};
        check_difference_preconditions(H, w, false);
        double v = cg_difference(H, w);
        text << "difference at w = " << wspec << ": " << v << "\n";
        out["w"] = wspec;
        out["difference"] = v;
    } else {
        auto P = sweep(H);
        text << "theta range : value\n";
        json steps = json::array();
        int n = (int)P.breakpoints.size();
        for (int i = 0; i < n; ++i) {
            double a = P.breakpoints[i];
            double b = i + 1 < n ? P.breakpoints[i + 1] : 360.0;
            text << "  " << a << " deg : ?\n";
            text << "  (" << a << ", " << b << ") : " << P.values[i] << "\n";
            steps.push_back({{"from", a}, {"to", b}, {"value", P.values[i]}});
        }
        out["breakpoints"] = P.breakpoints;
        out["steps"] = steps;
        if (sweep_n > 0) {
            std::ostringstream cs;
            cs << "theta,value\n";
            for (int k = 0; k < sweep_n; ++k) {
                double th = 360.0 * k / sweep_n;
                bool nb = false;
                for (double bp : P.breakpoints)
                    if (std::abs(th - bp) < 1e-9) nb = true;
                cs << th << ",";
                if (nb)
                    cs << "?";
                else
                    cs << cg_difference(H, std::polar(1.0, th * M_PI / 180.0));
                cs << "\n";
            }
            if (csv.empty())
                text << cs.str();
            else {
                std::ofstream cf(csv);
                cf << cs.str();
            }
        }
    }
    emit(j, out, text.str());
    return 0;
}

int cmd_seifert(const Job& j, const std::string& matrix) {
    Field F = NumberField::rationals();
    SeifertMatrix V = seifert_from(matrix);
    Poly delta = delta_from_seifert(V, F);
    int sig = classical_signature(V);
    std::ostringstream text;
    text << "Delta = " << Laurent(delta, 0).str() << "\n";
    text << "signature(V + V') = " << sig << "\n";
    emit(j, {{"command", "seifert"}, {"delta", Laurent(delta, 0).str()}, {"signature", sig}},
         text.str());
    return 0;
}

int cmd_crosscheck(const Job& j, const std::string& matrix) {
    auto D = load_diagram(j);
    auto res = crosscheck(D, seifert_from(matrix));
    std::ostringstream text;
    text << (res.pass ? "PASS" : "FAIL") << ": " << res.diagnostics << "\n";
    emit(j, {{"command", "crosscheck"}, {"pass", res.pass}, {"diagnostics", res.diagnostics}},
         text.str());
    return res.pass ? 0 : 1;
}

int cmd_quandle(const Job& j, const std::string& quandle, const std::string& phi_name) {
    auto D = load_diagram(j);
    long p = 7, t = 3;
    if (sscanf(quandle.c_str(), "F_%ld,t=%ld", &p, &t) != 2)
        throw std::runtime_error("quandle spec must look like F_7,t=3");
    AlexanderQuandle X{p, t};
    CocycleFn phi;
    if (phi_name == "psi")
        phi = phi_from_psi(X);
    else if (phi_name.rfind("mochizuki", 0) == 0) {
        long lam = 1;
        if (phi_name.size() > 9) lam = std::stol(phi_name.substr(10));
        phi = mochizuki_cocycle(X, lam);
        if (!is_cocycle(X, phi)) throw std::runtime_error("cocycle condition fails");
    } else
        throw std::runtime_error("unknown cocycle '" + phi_name + "'");
    auto ms = cocycle_invariant(D, X, phi);
    std::ostringstream text;
    json m = json::object();
    long total = 0;
    for (auto& [v, c] : ms) {
        text << "value " << v << " : " << c << " colorings\n";
        m[std::to_string(v)] = c;
        total += c;
    }
    text << "total colorings: " << total << "\n";
    emit(j, {{"command", "quandle-invariant"}, {"multiset", m}, {"total", total}}, text.str());
    return 0;
}

int cmd_builtin_list(const Job& j) {
    std::ostringstream text;
    json out = {{"command", "builtin"}};
    text << "diagrams:";
    for (auto& n : builtin_diagram_names()) text << " " << n;
    text << "\nrepresentations:";
    for (auto& n : builtin_rep_names()) text << " " << n;
    text << "\n";
    out["diagrams"] = builtin_diagram_names();
    out["representations"] = builtin_rep_names();
    emit(j, out, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted pairings of knots: colorings, linking forms, and signatures"};
    app.require_subcommand(1);
    Job job;
    std::string wspec, matrix = "trefoil", quandle = "F_7,t=3", phi_name = "psi", csv;
    int sweep_n = 0;
    bool check_rec = false;

    auto add_common = [&](CLI::App* c, bool with_rep = true) {
        c->add_option("--diagram", job.diagram_file, "diagram file (PD or relation format)");
        c->add_option("--builtin", job.builtin, "builtin diagram name");
        if (with_rep) c->add_option("--rep", job.rep, "representation: abelian, builtin:NAME, or JSON file");
        c->add_option("--modulus", job.modulus, "quotient modulus (default: the order polynomial)");
        c->add_flag("--json", job.json_out, "emit JSON");
        return c;
    };

    auto* c_color = add_common(app.add_subcommand("color", "solve the coloring system"));
    auto* c_pair = add_common(app.add_subcommand("pairing", "crossing-sum Gram matrix"));
    c_pair->add_option("--psi", job.psi, "psi family: sesquilinear, killing, hermitian");
    auto* c_bl = add_common(app.add_subcommand("blanchfield", "linking form on the reduced basis"), false);
    auto* c_cup = add_common(app.add_subcommand("cup-product", "trace-reduced Gram"));
    c_cup->add_option("--psi", job.psi, "psi family");
    auto* c_ta = add_common(app.add_subcommand("twisted-alex", "order polynomial"));
    c_ta->add_flag("--check-reciprocal", check_rec, "also verify Delta = unit * bar(Delta)");
    auto* c_cg = add_common(app.add_subcommand("cg-signature", "signature differences on the unit circle"));
    c_cg->add_option("--psi", job.psi, "psi family")->default_val("hermitian");
    c_cg->add_option("--w", wspec, "single twist a+bi on the unit circle");
    c_cg->add_option("--sweep", sweep_n, "CSV sweep grid size");
    c_cg->add_option("--csv", csv, "write sweep CSV to file");
    auto* c_sf = app.add_subcommand("seifert", "Seifert-matrix route");
    c_sf->add_option("--matrix", matrix, "JSON rows, or fixture name trefoil/fig8");
    c_sf->add_flag("--json", job.json_out, "emit JSON");
    auto* c_cc = add_common(app.add_subcommand("crosscheck", "diagram vs Seifert route"), false);
    c_cc->add_option("--matrix", matrix, "JSON rows, or fixture name trefoil/fig8");
    auto* c_qi = add_common(app.add_subcommand("quandle-invariant", "finite cocycle invariant"), false);
    c_qi->add_option("--quandle", quandle, "finite quandle, e.g. F_7,t=3");
    c_qi->add_option("--phi", phi_name, "cocycle: psi, mochizuki, mochizuki:k");
    auto* c_bi = app.add_subcommand("builtin", "builtin registry");
    c_bi->add_subcommand("list", "list builtin names");
    c_bi->add_flag("--json", job.json_out, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_color)) return cmd_color(job);
        if (app.got_subcommand(c_pair)) return cmd_pairing(job);
        if (app.got_subcommand(c_bl)) return cmd_blanchfield(job);
        if (app.got_subcommand(c_cup)) return cmd_cup(job);
        if (app.got_subcommand(c_ta)) return cmd_talex(job, check_rec);
        if (app.got_subcommand(c_cg)) return cmd_signature(job, wspec, sweep_n, csv);
        if (app.got_subcommand(c_sf)) return cmd_seifert(job, matrix);
        if (app.got_subcommand(c_cc)) return cmd_crosscheck(job, matrix);
        if (app.got_subcommand(c_qi)) return cmd_quandle(job, quandle, phi_name);
        if (app.got_subcommand(c_bi)) return cmd_builtin_list(job);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
