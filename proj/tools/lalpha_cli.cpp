// Command-line front end over the lalpha C API: graph construction, spectra,
// alpha sweeps, characteristic polynomials, and the verification suite.
//
// Exit codes: 0 ok, 1 verification failure or internal error, 2 parse or
// parameter error, 3 domain error (alpha range, hypothesis), 4 size limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lalpha.h"

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int exit_code(la_status st) {
    switch (st) {
        case LA_OK: return 0;
        case LA_ERR_PARAM:
        case LA_ERR_PARSE:
        case LA_ERR_IO: return 2;
        case LA_ERR_ALPHA:
        case LA_ERR_HYPOTHESIS: return 3;
        case LA_ERR_SIZE: return 4;
        default: return 1;
    }
}

int complain(la_status st) {
    std::cerr << "error (" << la_status_name(st) << "): " << la_last_error() << "\n";
    return exit_code(st);
}

struct GraphHandle {
    la_graph* g = nullptr;
    ~GraphHandle() { la_graph_free(g); }
};

struct SpectrumHandle {
    la_spectrum* s = nullptr;
    ~SpectrumHandle() { la_spectrum_free(s); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { la_string_free(s); }
};

std::string spectrum_json(double alpha, const la_spectrum* s) {
    std::string out = "{\"alpha\": " + fmt12(alpha) + ", \"spectrum\": [";
    for (int i = 0; i < la_spectrum_distinct(s); ++i) {
        if (i) out += ", ";
        out += "{\"value\": " + fmt12(la_spectrum_value(s, i)) +
               ", \"multiplicity\": " + std::to_string(la_spectrum_multiplicity(s, i)) + "}";
    }
    out += "]}";
    return out;
}

void print_spectrum_table(const la_spectrum* s) {
    std::printf("%-20s %s\n", "value", "multiplicity");
    for (int i = 0; i < la_spectrum_distinct(s); ++i)
        std::printf("%-20s %d\n", fmt12(la_spectrum_value(s, i)).c_str(),
                    la_spectrum_multiplicity(s, i));
}

std::string describe(const la_graph* g) {
    int k = 0;
    bool regular = la_graph_is_regular(g, &k) != 0;
    std::string out = "n=" + std::to_string(la_graph_order(g)) +
                      " m=" + std::to_string(la_graph_size(g));
    out += regular ? " regular=yes k=" + std::to_string(k) : " regular=no";
    out += la_graph_is_bipartite(g) ? " bipartite=yes" : " bipartite=no";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for the matrix family alpha*D + (alpha-1)*A"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand(
        "construct", "build a graph from a named family or an operation on edge-list files");
    std::string family, op, g_file, h_file, out_path;
    int arg_n = -1, arg_p = -1, arg_q = -1, arg_l = -1, arg_c = -1, arg_s = -1, arg_eta = -1;
    int arg_u = 0, arg_v = 0;
    construct->add_option("--family", family,
                          "complete|path|cycle|complete_bipartite|star|empty|pineapple|"
                          "h_graph|kk_graph|core_satellite");
    construct->add_option("--op", op,
                          "union|join|cartesian|direct|strong|coalesce|splitting");
    construct->add_option("--g", g_file, "first operand edge-list file");
    construct->add_option("--h", h_file, "second operand edge-list file");
    construct->add_option("--n", arg_n);
    construct->add_option("--p", arg_p);
    construct->add_option("--q", arg_q);
    construct->add_option("--l", arg_l);
    construct->add_option("--c", arg_c);
    construct->add_option("--s", arg_s);
    construct->add_option("--eta", arg_eta);
    construct->add_option("--u", arg_u, "coalesce vertex in g");
    construct->add_option("--v", arg_v, "coalesce vertex in h");
    construct->add_option("--out", out_path, "output edge-list path");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "L_alpha spectrum of a graph");
    std::string graph_path, format = "json";
    double alpha = 0.0;
    bool dump_matrix = false;
    spectrum->add_option("--graph", graph_path, "edge-list file")->required();
    spectrum->add_option("--alpha", alpha, "alpha in [0,1]")->required();
    spectrum->add_option("--format", format, "json|table");
    spectrum->add_flag("--matrix", dump_matrix, "also print the L_alpha matrix as JSON");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "eigenvalues across an alpha grid, CSV output");
    std::string sweep_graph, sweep_out;
    double alpha_start = 0.0, alpha_end = 1.0;
    int steps = 0;
    sweep->add_option("--graph", sweep_graph)->required();
    sweep->add_option("--alpha-start", alpha_start)->required();
    sweep->add_option("--alpha-end", alpha_end)->required();
    sweep->add_option("--steps", steps)->required();
    sweep->add_option("--out", sweep_out, "CSV path (stdout when omitted)");

    // charpoly
    auto* charpoly = app.add_subcommand(
        "charpoly", "monic characteristic polynomial of L_alpha (highest degree first)");
    std::string cp_graph;
    double cp_alpha = 0.0;
    charpoly->add_option("--graph", cp_graph)->required();
    charpoly->add_option("--alpha", cp_alpha)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem-vs-oracle verification");
    std::string suite = "default", theorem, vg, vh;
    int grid_points = 0, v_u = 0, v_v = 0;
    double tol = 0.0;
    bool as_json = false;
    verify->add_option("--suite", suite, "default");
    verify->add_option("--theorem", theorem, "single theorem id (overrides --suite)");
    verify->add_option("--g", vg, "graph spec, e.g. k5, c4, pine5_3");
    verify->add_option("--h", vh, "second graph spec");
    verify->add_option("--alpha-grid", grid_points, "number of grid points in [0,1]");
    verify->add_option("--tol", tol, "comparison tolerance");
    verify->add_option("--u", v_u, "coalescence vertex in g");
    verify->add_option("--v", v_v, "coalescence vertex in h");
    verify->add_flag("--json", as_json, "emit the JSON report instead of the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (construct->parsed()) {
        GraphHandle result;
        la_status st = LA_OK;
        if (!family.empty()) {
            auto need = [&](int value, const char* flag) {
                if (value < 0) {
                    std::cerr << "family " << family << " requires " << flag << "\n";
                    std::exit(2);
                }
                return value;
            };
            if (family == "complete") st = la_graph_complete(need(arg_n, "--n"), &result.g);
            else if (family == "path") st = la_graph_path(need(arg_n, "--n"), &result.g);
            else if (family == "cycle") st = la_graph_cycle(need(arg_n, "--n"), &result.g);
            else if (family == "star") st = la_graph_star(need(arg_n, "--n"), &result.g);
            else if (family == "empty") st = la_graph_empty(need(arg_n, "--n"), &result.g);
            else if (family == "complete_bipartite")
                st = la_graph_complete_bipartite(need(arg_p, "--p"), need(arg_q, "--q"), &result.g);
            else if (family == "pineapple")
                st = la_graph_pineapple(need(arg_p, "--p"), need(arg_q, "--q"), &result.g);
            else if (family == "h_graph")
                st = la_graph_h_graph(need(arg_n, "--n"), need(arg_l, "--l"), &result.g);
            else if (family == "kk_graph")
                st = la_graph_kk_graph(need(arg_n, "--n"), need(arg_l, "--l"), &result.g);
            else if (family == "core_satellite")
                st = la_graph_core_satellite(need(arg_c, "--c"), need(arg_s, "--s"),
                                             need(arg_eta, "--eta"), &result.g);
            else {
                std::cerr << "unknown family: " << family << "\n";
                return 2;
            }
        } else if (!op.empty()) {
            if (g_file.empty()) {
                std::cerr << "--op requires --g\n";
                return 2;
            }
            GraphHandle g;
            if (auto s = la_graph_read(g_file.c_str(), &g.g); s != LA_OK) return complain(s);
            if (op == "splitting") {
                st = la_graph_splitting(g.g, &result.g);
            } else {
                if (h_file.empty()) {
                    std::cerr << "--op " << op << " requires --h\n";
                    return 2;
                }
                GraphHandle h;
                if (auto s = la_graph_read(h_file.c_str(), &h.g); s != LA_OK) return complain(s);
                if (op == "union") st = la_graph_union(g.g, h.g, &result.g);
                else if (op == "join") st = la_graph_join(g.g, h.g, &result.g);
                else if (op == "cartesian") st = la_graph_cartesian(g.g, h.g, &result.g);
                else if (op == "direct") st = la_graph_direct(g.g, h.g, &result.g);
                else if (op == "strong") st = la_graph_strong(g.g, h.g, &result.g);
                else if (op == "coalesce") st = la_graph_coalesce(g.g, arg_u, h.g, arg_v, &result.g);
                else {
                    std::cerr << "unknown op: " << op << "\n";
                    return 2;
                }
            }
        } else {
            std::cerr << "construct needs --family or --op\n";
            return 2;
        }
        if (st != LA_OK) return complain(st);
        if (!out_path.empty()) {
            if (auto s = la_graph_write(result.g, out_path.c_str()); s != LA_OK)
                return complain(s);
            std::cout << describe(result.g) << "\n";
        } else {
            std::cerr << describe(result.g) << "\n";
            StringHandle text{la_graph_to_string(result.g)};
            std::cout << text.s;
        }
        return 0;
    }

    if (spectrum->parsed()) {
        GraphHandle g;
        if (auto s = la_graph_read(graph_path.c_str(), &g.g); s != LA_OK) return complain(s);
        if (dump_matrix) {
            StringHandle m{la_lalpha_matrix_json(g.g, alpha)};
            if (!m.s) return complain(LA_ERR_ALPHA);
            std::cout << m.s << "\n";
        }
        SpectrumHandle s;
        if (auto st = la_spectrum_lalpha(g.g, alpha, &s.s); st != LA_OK) return complain(st);
        if (format == "table") print_spectrum_table(s.s);
        else std::cout << spectrum_json(alpha, s.s) << "\n";
        return 0;
    }

    if (sweep->parsed()) {
        if (steps < 2) {
            std::cerr << "sweep requires --steps >= 2\n";
            return 2;
        }
        if (alpha_start < 0.0 || alpha_end > 1.0 || alpha_start >= alpha_end) {
            std::cerr << "sweep range must satisfy 0 <= start < end <= 1\n";
            return 3;
        }
        GraphHandle g;
        if (auto s = la_graph_read(sweep_graph.c_str(), &g.g); s != LA_OK) return complain(s);
        const int n = la_graph_order(g.g);
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!sweep_out.empty()) {
            file.open(sweep_out);
            if (!file) {
                std::cerr << "cannot open " << sweep_out << "\n";
                return 2;
            }
            os = &file;
        }
        *os << "alpha";
        for (int i = 1; i <= n; ++i) *os << ",lambda_" << i;
        *os << "\n";
        for (int step = 0; step < steps; ++step) {
            double a = alpha_start + (alpha_end - alpha_start) * step / (steps - 1);
            SpectrumHandle s;
            if (auto st = la_spectrum_lalpha(g.g, a, &s.s); st != LA_OK) return complain(st);
            *os << fmt12(a);
            for (int i = 0; i < la_spectrum_distinct(s.s); ++i)
                for (int rep = 0; rep < la_spectrum_multiplicity(s.s, i); ++rep)
                    *os << "," << fmt12(la_spectrum_value(s.s, i));
            *os << "\n";
        }
        return 0;
    }

    if (charpoly->parsed()) {
        GraphHandle g;
        if (auto s = la_graph_read(cp_graph.c_str(), &g.g); s != LA_OK) return complain(s);
        std::vector<double> coeffs(size_t(la_graph_order(g.g)) + 1);
        int len = 0;
        if (auto st = la_charpoly_lalpha(g.g, cp_alpha, coeffs.data(),
                                         int(coeffs.size()), &len);
            st != LA_OK)
            return complain(st);
        std::string out = "[";
        for (int i = 0; i < len; ++i) {
            if (i) out += ", ";
            out += fmt12(coeffs[i]);
        }
        std::cout << out << "]\n";
        return 0;
    }

    if (verify->parsed()) {
        StringHandle json, table;
        int unexpected = 0;
        la_status st;
        if (!theorem.empty()) {
            st = la_verify_case(theorem.c_str(), vg.empty() ? nullptr : vg.c_str(),
                                vh.empty() ? nullptr : vh.c_str(), grid_points, tol, v_u, v_v,
                                as_json ? &json.s : nullptr, as_json ? nullptr : &table.s,
                                &unexpected);
        } else if (suite == "default") {
            st = la_verify_default(as_json ? &json.s : nullptr, as_json ? nullptr : &table.s,
                                   &unexpected);
        } else {
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }
        if (st != LA_OK) return complain(st);
        if (as_json && json.s) std::cout << json.s << "\n";
        if (!as_json && table.s) std::cout << table.s;
        return unexpected == 0 ? 0 : 1;
    }
    return 0;
}
