#include "lalpha.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "eigen.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "verify.hpp"

using namespace lalpha;

struct la_graph {
    Graph g;
};

struct la_spectrum {
    Spectrum s;
};

namespace {

thread_local std::string t_last_error;

la_status map_errc(Errc c) {
    switch (c) {
        case Errc::parameter_out_of_range:
        case Errc::invalid_vertex:
        case Errc::degree_mismatch:
            return LA_ERR_PARAM;
        case Errc::parse_error:
            return LA_ERR_PARSE;
        case Errc::alpha_out_of_range:
        case Errc::alpha_boundary:
            return LA_ERR_ALPHA;
        case Errc::size_mismatch:
            return LA_ERR_SIZE;
        case Errc::not_regular:
        case Errc::not_equitable:
        case Errc::not_orthogonal:
            return LA_ERR_HYPOTHESIS;
        case Errc::convergence_failure:
            return LA_ERR_CONVERGENCE;
        case Errc::io_error:
            return LA_ERR_IO;
    }
    return LA_ERR_INTERNAL;
}

template <typename Fn>
la_status guarded(Fn&& fn) {
    try {
        fn();
        return LA_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return LA_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

la_status make_graph(la_graph** out, Graph g) {
    *out = new la_graph{std::move(g)};
    return LA_OK;
}

} // namespace

extern "C" {

const char* la_status_name(la_status status) {
    switch (status) {
        case LA_OK: return "ok";
        case LA_ERR_PARAM: return "parameter-error";
        case LA_ERR_PARSE: return "parse-error";
        case LA_ERR_ALPHA: return "alpha-error";
        case LA_ERR_SIZE: return "size-error";
        case LA_ERR_HYPOTHESIS: return "hypothesis-error";
        case LA_ERR_CONVERGENCE: return "convergence-error";
        case LA_ERR_IO: return "io-error";
        case LA_ERR_INTERNAL: return "internal-error";
    }
    return "?";
}

const char* la_last_error(void) {
    return t_last_error.c_str();
}

const char* la_version(void) {
    return "0.1.0";
}

la_status la_graph_complete(int n, la_graph** out) {
    return guarded([&] { make_graph(out, make_complete(n)); });
}
la_status la_graph_path(int n, la_graph** out) {
    return guarded([&] { make_graph(out, make_path(n)); });
}
la_status la_graph_cycle(int n, la_graph** out) {
    return guarded([&] { make_graph(out, make_cycle(n)); });
}
la_status la_graph_complete_bipartite(int p, int q, la_graph** out) {
    return guarded([&] { make_graph(out, make_complete_bipartite(p, q)); });
}
la_status la_graph_star(int n, la_graph** out) {
    return guarded([&] { make_graph(out, make_star(n)); });
}
la_status la_graph_empty(int n, la_graph** out) {
    return guarded([&] { make_graph(out, make_empty(n)); });
}
la_status la_graph_pineapple(int p, int q, la_graph** out) {
    return guarded([&] { make_graph(out, make_pineapple(p, q)); });
}
la_status la_graph_h_graph(int n, int l, la_graph** out) {
    return guarded([&] { make_graph(out, make_h_graph(n, l)); });
}
la_status la_graph_kk_graph(int n, int l, la_graph** out) {
    return guarded([&] { make_graph(out, make_kk_graph(n, l)); });
}
la_status la_graph_core_satellite(int c, int s, int eta, la_graph** out) {
    return guarded([&] { make_graph(out, make_core_satellite(c, s, eta)); });
}

la_status la_graph_union(const la_graph* g, const la_graph* h, la_graph** out) {
    return guarded([&] { make_graph(out, graph_union(g->g, h->g)); });
}
la_status la_graph_join(const la_graph* g, const la_graph* h, la_graph** out) {
    return guarded([&] { make_graph(out, graph_join(g->g, h->g)); });
}
la_status la_graph_cartesian(const la_graph* g, const la_graph* h, la_graph** out) {
    return guarded([&] { make_graph(out, graph_cartesian(g->g, h->g)); });
}
la_status la_graph_direct(const la_graph* g, const la_graph* h, la_graph** out) {
    return guarded([&] { make_graph(out, graph_direct(g->g, h->g)); });
}
la_status la_graph_strong(const la_graph* g, const la_graph* h, la_graph** out) {
    return guarded([&] { make_graph(out, graph_strong(g->g, h->g)); });
}
la_status la_graph_coalesce(const la_graph* g, int u, const la_graph* h, int v, la_graph** out) {
    return guarded([&] { make_graph(out, graph_coalesce(g->g, u, h->g, v)); });
}
la_status la_graph_splitting(const la_graph* g, la_graph** out) {
    return guarded([&] { make_graph(out, make_splitting(g->g)); });
}

la_status la_graph_read(const char* path, la_graph** out) {
    return guarded([&] { make_graph(out, read_edge_list_file(path)); });
}
la_status la_graph_write(const la_graph* g, const char* path) {
    return guarded([&] { write_edge_list_file(g->g, path); });
}
la_status la_graph_from_string(const char* text, la_graph** out) {
    return guarded([&] { make_graph(out, parse_edge_list(text)); });
}
char* la_graph_to_string(const la_graph* g) {
    return dup_string(format_edge_list(g->g));
}

int la_graph_order(const la_graph* g) {
    return g->g.order();
}
int la_graph_size(const la_graph* g) {
    return g->g.size();
}
int la_graph_degree(const la_graph* g, int v) {
    if (v < 0 || v >= g->g.order()) return -1;
    return g->g.degrees()[v];
}
int la_graph_is_regular(const la_graph* g, int* k) {
    int deg = 0;
    bool r = is_regular(g->g, &deg);
    if (k) *k = r ? deg : -1;
    return r ? 1 : 0;
}
int la_graph_is_bipartite(const la_graph* g) {
    return is_bipartite(g->g) ? 1 : 0;
}
int la_graph_is_connected(const la_graph* g) {
    return is_connected(g->g) ? 1 : 0;
}

char* la_graph_report_json(const la_graph* g) {
    auto r = structural_report(g->g);
    nlohmann::json twins = nlohmann::json::array();
    for (const auto& tc : r.twin_classes)
        twins.push_back({
            {"kind", tc.kind == TwinClass::Kind::true_twin ? "true" : "false"},
            {"vertices", tc.vertices},
            {"degree", tc.degree},
        });
    nlohmann::json doc = {
        {"order", g->g.order()},
        {"size", g->g.size()},
        {"degrees", r.degrees},
        {"regular", r.regular},
        {"bipartite", r.bipartite},
        {"connected", r.connected},
        {"twin_classes", twins},
    };
    if (r.regular) doc["regular_degree"] = r.regular_degree;
    if (r.bipartite) doc["side"] = r.side;
    return dup_string(doc.dump(2));
}

la_status la_spectrum_lalpha(const la_graph* g, double alpha, la_spectrum** out) {
    return guarded([&] {
        *out = new la_spectrum{eigen_sym(l_alpha_matrix(g->g, Alpha(alpha))).spectrum};
    });
}
la_status la_spectrum_aalpha(const la_graph* g, double alpha, la_spectrum** out) {
    return guarded([&] {
        *out = new la_spectrum{eigen_sym(a_alpha_matrix(g->g, Alpha(alpha))).spectrum};
    });
}

int la_spectrum_distinct(const la_spectrum* s) {
    return static_cast<int>(s->s.lines().size());
}
int la_spectrum_order(const la_spectrum* s) {
    return s->s.order();
}
double la_spectrum_value(const la_spectrum* s, int i) {
    return s->s.lines().at(i).value;
}
int la_spectrum_multiplicity(const la_spectrum* s, int i) {
    return s->s.lines().at(i).multiplicity;
}

char* la_lalpha_matrix_json(const la_graph* g, double alpha) {
    try {
        SymMatrix m = l_alpha_matrix(g->g, Alpha(alpha));
        nlohmann::json doc = {{"n", m.dim()}, {"entries", m.entries()}};
        return dup_string(doc.dump());
    } catch (const Error& e) {
        t_last_error = e.what();
        return nullptr;
    }
}

la_status la_charpoly_lalpha(const la_graph* g, double alpha, double* coeffs, int capacity,
                             int* out_len) {
    return guarded([&] {
        const int n = g->g.order();
        if (n > 20)
            fail(Errc::size_mismatch,
                 "characteristic polynomial limited to n <= 20 (got n=" + std::to_string(n) + ")");
        if (capacity < n + 1) fail(Errc::size_mismatch, "coefficient buffer too small");
        RealPoly p = char_poly(l_alpha_matrix(g->g, Alpha(alpha)));
        auto desc = p.coeffs_descending();
        for (int i = 0; i < n + 1; ++i) coeffs[i] = i < int(desc.size()) ? desc[i] : 0.0;
        if (out_len) *out_len = n + 1;
    });
}

la_status la_verify_default(char** json_out, char** table_out, int* unexpected_failures) {
    return guarded([&] {
        SuiteResult r = run_suite(default_corpus());
        if (json_out) *json_out = dup_string(suite_json(r));
        if (table_out) *table_out = dup_string(suite_table(r));
        if (unexpected_failures) *unexpected_failures = r.summary.unexpected_failures;
    });
}

la_status la_verify_case(const char* theorem, const char* g_spec, const char* h_spec,
                         int grid_points, double tol, int u, int v, char** json_out,
                         char** table_out, int* unexpected_failures) {
    return guarded([&] {
        auto c = make_case(theorem ? theorem : "", g_spec ? g_spec : "",
                           h_spec ? h_spec : "", grid_points, tol);
        c.u = u;
        c.v = v;
        SuiteResult r = run_suite({c});
        if (json_out) *json_out = dup_string(suite_json(r));
        if (table_out) *table_out = dup_string(suite_table(r));
        if (unexpected_failures) *unexpected_failures = r.summary.unexpected_failures;
    });
}

void la_graph_free(la_graph* g) {
    delete g;
}
void la_spectrum_free(la_spectrum* s) {
    delete s;
}
void la_string_free(char* s) {
    delete[] s;
}

} // extern "C"
