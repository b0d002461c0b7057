#include "theorems.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace lalpha::thm {

namespace {

void require_unit_interval_open(Alpha alpha, const char* who) {
    if (alpha.value >= 1.0)
        fail(Errc::alpha_boundary, std::string(who) + " requires alpha in [0,1)");
}

// Removes one entry equal to `value` (the regular graph's top adjacency
// eigenvalue) from the expansion.
std::vector<double> drop_top(const Spectrum& adj, double value, const char* who) {
    auto vals = adj.expanded();
    if (vals.empty() || std::fabs(vals.front() - value) > 1e-6)
        fail(Errc::not_regular,
             std::string(who) + ": adjacency spectrum does not peak at the stated degree");
    vals.erase(vals.begin());
    return vals;
}

std::pair<double, double> eig2x2(double a, double b, double c, double d) {
    double tr = a + d;
    double disc = (a - d) * (a - d) + 4.0 * b * c;
    double root = std::sqrt(std::max(disc, 0.0));
    return {(tr + root) / 2.0, (tr - root) / 2.0};
}

} // namespace

Spectrum complete(int n, Alpha alpha) {
    if (n < 1) fail(Errc::parameter_out_of_range, "complete spectrum: n >= 1 required");
    const double a = alpha.value;
    std::vector<SpectralLine> lines{{2 * a * n - 2 * a - n + 1, 1}};
    if (n > 1) lines.push_back({a * n - 2 * a + 1, n - 1});
    return Spectrum::from_lines(lines);
}

Spectrum complete_bipartite(int p, int q, Alpha alpha) {
    if (p < q || q < 1)
        fail(Errc::parameter_out_of_range, "complete bipartite spectrum: p >= q >= 1 required");
    const double a = alpha.value;
    double radicand = a * a * double(p + q) * (p + q) + 4.0 * p * q * (1.0 - 2.0 * a);
    double root = std::sqrt(std::max(radicand, 0.0));
    std::vector<SpectralLine> lines{{(a * (p + q) + root) / 2.0, 1},
                                    {(a * (p + q) - root) / 2.0, 1}};
    if (q > 1) lines.push_back({a * p, q - 1});
    if (p > 1) lines.push_back({a * q, p - 1});
    return Spectrum::from_lines(lines);
}

Spectrum regular_shift(const Graph& g, Alpha alpha) {
    int k = 0;
    if (!is_regular(g, &k)) fail(Errc::not_regular, "regular_shift requires a regular graph");
    const double a = alpha.value;
    auto adj = eigen_sym(adjacency_matrix(g)).values;
    for (double& x : adj) x = a * k + (a - 1.0) * x;
    return Spectrum::from_values(std::move(adj));
}

std::vector<TwinEigenvalue> twin_eigenvalues(const Graph& g, Alpha alpha) {
    const double a = alpha.value;
    std::vector<TwinEigenvalue> out;
    for (const auto& tc : structural_report(g).twin_classes) {
        double value = tc.kind == TwinClass::Kind::true_twin ? a * (tc.degree - 1) + 1.0
                                                             : a * tc.degree;
        out.push_back({value, static_cast<int>(tc.vertices.size()) - 1});
    }
    return out;
}

Spectrum union_spectrum(const Spectrum& sg, const Spectrum& sh) {
    auto vals = sg.expanded();
    auto other = sh.expanded();
    vals.insert(vals.end(), other.begin(), other.end());
    return Spectrum::from_values(std::move(vals));
}

std::vector<double> join_lifted(const std::vector<EigenPair>& g_pairs,
                                const std::vector<EigenPair>& h_pairs, int n1, int n2,
                                Alpha alpha) {
    auto check_orthogonal = [](const EigenPair& p, int n) {
        if (static_cast<int>(p.vector.size()) != n)
            fail(Errc::size_mismatch, "eigenvector length does not match graph order");
        double dot = 0.0, norm2 = 0.0;
        for (double x : p.vector) {
            dot += x;
            norm2 += x * x;
        }
        double denom = std::sqrt(norm2) * std::sqrt(double(n));
        if (denom == 0.0 || std::fabs(dot) > 1e-8 * denom)
            fail(Errc::not_orthogonal, "eigenvector is not orthogonal to the all-ones vector");
    };
    const double a = alpha.value;
    std::vector<double> vals;
    for (const auto& p : g_pairs) {
        check_orthogonal(p, n1);
        vals.push_back(a * n2 + p.value);
    }
    for (const auto& p : h_pairs) {
        check_orthogonal(p, n2);
        vals.push_back(a * n1 + p.value);
    }
    return vals;
}

Spectrum join_regular(int k, int n1, int r, int n2, const Spectrum& adj_g,
                      const Spectrum& adj_h, Alpha alpha) {
    if (adj_g.order() != n1 || adj_h.order() != n2)
        fail(Errc::size_mismatch, "join_regular: adjacency spectrum orders mismatch");
    const double a = alpha.value;
    auto [m1, m2] = eig2x2((2 * k + n2) * a - k, (a - 1.0) * n2,
                           (a - 1.0) * n1, (2 * r + n1) * a - r);
    std::vector<double> vals{m1, m2};
    for (double x : drop_top(adj_g, double(k), "join_regular"))
        vals.push_back(a * (k + n2) + (a - 1.0) * x);
    for (double x : drop_top(adj_h, double(r), "join_regular"))
        vals.push_back(a * (r + n1) + (a - 1.0) * x);
    return Spectrum::from_values(std::move(vals));
}

Spectrum cartesian(const Spectrum& sg, const Spectrum& sh) {
    std::vector<double> vals;
    vals.reserve(size_t(sg.order()) * sh.order());
    for (double x : sg.expanded())
        for (double y : sh.expanded()) vals.push_back(x + y);
    return Spectrum::from_values(std::move(vals));
}

std::vector<double> direct_subset(const Spectrum& sg, int r) {
    if (r < 0) fail(Errc::parameter_out_of_range, "direct_subset: degree must be >= 0");
    auto vals = sg.expanded();
    for (double& x : vals) x *= r;
    return vals;
}

Spectrum direct_regular(int r1, int r2, const Spectrum& adj_g, const Spectrum& adj_h,
                        Alpha alpha) {
    const double a = alpha.value;
    std::vector<double> vals;
    vals.reserve(size_t(adj_g.order()) * adj_h.order());
    for (double x : adj_g.expanded())
        for (double y : adj_h.expanded()) vals.push_back(a * r1 * r2 + (a - 1.0) * x * y);
    return Spectrum::from_values(std::move(vals));
}

std::vector<double> strong_subset(const Spectrum& sg, int r, Alpha alpha) {
    if (r < 0) fail(Errc::parameter_out_of_range, "strong_subset: degree must be >= 0");
    const double a = alpha.value;
    auto vals = sg.expanded();
    for (double& x : vals) x = (r + 1) * x + (2.0 * a * r - r);
    return vals;
}

Spectrum strong_regular(int r1, int r2, const Spectrum& adj_g, const Spectrum& adj_h,
                        Alpha alpha) {
    const double a = alpha.value;
    std::vector<double> vals;
    vals.reserve(size_t(adj_g.order()) * adj_h.order());
    for (double x : adj_g.expanded())
        for (double y : adj_h.expanded())
            vals.push_back(a * (r1 * r2 + r1 + r2) + (a - 1.0) * (x * y + x + y));
    return Spectrum::from_values(std::move(vals));
}

RealPoly coalescence(const RealPoly& p_g, const RealPoly& p_g_u, const RealPoly& p_h,
                     const RealPoly& p_h_v) {
    if (p_g.degree() < 1 || p_g.degree() != p_g_u.degree() + 1)
        fail(Errc::degree_mismatch, "coalescence: deg(P_G) must equal deg(P_G_u) + 1");
    if (p_h.degree() < 1 || p_h.degree() != p_h_v.degree() + 1)
        fail(Errc::degree_mismatch, "coalescence: deg(P_H) must equal deg(P_H_v) + 1");
    const RealPoly x = RealPoly::monomial(1);
    return p_g * p_h_v + p_g_u * p_h - x * p_g_u * p_h_v;
}

RealPoly splitting_regular(int k, const Spectrum& adj_g, Alpha alpha) {
    const double a = alpha.value;
    RealPoly prod = RealPoly::constant(1.0);
    for (double lam : adj_g.expanded()) {
        double c1 = -3.0 * a * k - (a - 1.0) * lam;
        double c0 = 2.0 * a * a * k * k + (a - 1.0) * a * k * lam - (a - 1.0) * (a - 1.0) * lam * lam;
        prod = prod * RealPoly({c0, c1, 1.0});
    }
    return prod;
}

// ---- family spectra ----

Partition pineapple_partition(int p, int q) {
    std::vector<int> clique, pendants;
    for (int v = 0; v < p - 1; ++v) clique.push_back(v);
    for (int v = p; v < p + q; ++v) pendants.push_back(v);
    return Partition(p + q, {clique, {p - 1}, pendants});
}

Spectrum pineapple(int p, int q, Alpha alpha) {
    if (p < 3 || q < 1) fail(Errc::parameter_out_of_range, "pineapple spectrum: p >= 3, q >= 1");
    require_unit_interval_open(alpha, "pineapple spectrum");
    const double a = alpha.value;
    Graph g = make_pineapple(p, q);
    Spectrum quotient = quotient_spectrum(l_alpha_matrix(g, alpha), pineapple_partition(p, q));
    std::vector<double> vals = quotient.expanded();
    vals.insert(vals.end(), size_t(q - 1), a);
    vals.insert(vals.end(), size_t(p - 2), a * (p - 2) + 1.0);
    return Spectrum::from_values(std::move(vals));
}

Partition h_graph_partition(int n, int l) {
    if (l >= n) fail(Errc::parameter_out_of_range, "h_graph partition requires l < n");
    std::vector<int> m1, u1, m2, u2;
    for (int v = 0; v < l; ++v) m1.push_back(v);
    for (int v = l; v < n; ++v) u1.push_back(v);
    for (int v = n; v < n + l; ++v) m2.push_back(v);
    for (int v = n + l; v < 2 * n; ++v) u2.push_back(v);
    return Partition(2 * n, {m1, u1, m2, u2});
}

Spectrum h_graph(int n, int l, Alpha alpha) {
    if (n < 3 || l < 1 || l >= n)
        fail(Errc::parameter_out_of_range, "h_graph spectrum: n >= 3 and 1 <= l < n required");
    require_unit_interval_open(alpha, "h_graph spectrum");
    const double a = alpha.value;
    Graph g = make_h_graph(n, l);
    Spectrum quotient = quotient_spectrum(l_alpha_matrix(g, alpha), h_graph_partition(n, l));
    std::vector<double> vals = quotient.expanded();
    vals.insert(vals.end(), size_t(l - 1), n * a);
    vals.insert(vals.end(), size_t(2 * n - 2 * l - 2), a * (n - 2) + 1.0);
    vals.insert(vals.end(), size_t(l - 1), a * (n - 2) + 2.0);
    return Spectrum::from_values(std::move(vals));
}

Partition kk_graph_partition(int n, int l) {
    std::vector<int> rest1, attached, rest2;
    for (int v = 1; v < n; ++v) rest1.push_back(v);
    for (int v = n; v < n + l; ++v) attached.push_back(v);
    for (int v = n + l; v < 2 * n; ++v) rest2.push_back(v);
    std::vector<std::vector<int>> blocks{{0}, rest1, attached};
    if (!rest2.empty()) blocks.push_back(rest2);
    return Partition(2 * n, std::move(blocks));
}

Spectrum kk_graph(int n, int l, Alpha alpha) {
    if (n < 3 || l < 1 || l > n)
        fail(Errc::parameter_out_of_range, "kk_graph spectrum: n >= 3 and 1 <= l <= n required");
    require_unit_interval_open(alpha, "kk_graph spectrum");
    const double a = alpha.value;
    Graph g = make_kk_graph(n, l);
    Spectrum quotient = quotient_spectrum(l_alpha_matrix(g, alpha), kk_graph_partition(n, l));
    std::vector<double> vals = quotient.expanded();
    // At l = n the second copy has no unattached vertices: the quotient loses
    // a row and the degree-(n-1) twin class grows to n-1 members.
    int mult_low = l < n ? 2 * n - l - 3 : n - 2;
    vals.insert(vals.end(), size_t(mult_low), a * (n - 2) + 1.0);
    vals.insert(vals.end(), size_t(l - 1), a * (n - 1) + 1.0);
    return Spectrum::from_values(std::move(vals));
}

Spectrum core_satellite(int c, int s, int eta, Alpha alpha) {
    if (c < 1 || s < 1 || eta < 2)
        fail(Errc::parameter_out_of_range, "core_satellite spectrum: c,s >= 1 and eta >= 2");
    // Theorem instantiation: G = K_c (degree c-1), H = eta K_s (degree s-1).
    std::vector<SpectralLine> adj_core{{double(c - 1), 1}};
    if (c > 1) adj_core.push_back({-1.0, c - 1});
    std::vector<SpectralLine> adj_sat{{double(s - 1), eta}};
    if (s > 1) adj_sat.push_back({-1.0, eta * (s - 1)});
    return join_regular(c - 1, c, s - 1, eta * s, Spectrum::from_lines(adj_core),
                        Spectrum::from_lines(adj_sat), alpha);
}

// ---- printed-formula cross-checks ----

std::array<double, 4> h_graph_thetas(int n, int l, Alpha alpha) {
    const double a = alpha.value;
    double r1 = 8 * a * a * l + a * a * n * n - 4 * a * a * n + 4 * a * a - 12 * a * l -
                2 * a * n * n + 6 * a * n - 4 * a + 4.0 * l + double(n) * n - 2 * n + 1;
    double r2 = a * a * n * n + 4 * a * l - 2 * a * n * n - 2 * a * n - 4.0 * l +
                double(n) * n + 2 * n + 1;
    double s1 = std::sqrt(std::max(r1, 0.0));
    double s2 = std::sqrt(std::max(r2, 0.0));
    double base12 = 1.5 * a * n - a - 0.5 * n + 0.5;
    double base34 = 1.5 * a * n - 2 * a - 0.5 * n + 1.5;
    return {base12 - s1 / 2, base12 + s1 / 2, base34 - s2 / 2, base34 + s2 / 2};
}

RealPoly pineapple_printed_poly(int p, int q, Alpha alpha) {
    const double a = alpha.value;
    double c2 = -3 * a * p - a * q + 4 * a + p - 2.0;
    double c1 = 2 * a * a * a * p * p - 6 * a * a * p + 4 * a * a - a * p * p +
                2 * a * a * p * q - 4 * a * a * q + 5 * a * p - 4 * a - a * p * q + 4 * a * q -
                p - q + 1.0;
    double c0 = 2 * a * a * a * p * q - 3 * a * a * a * q - 5 * a * a * p * q + 8 * a * a * q +
                4 * a * p * q - 7 * a * q - double(p) * q + 2.0 * q;
    return RealPoly({c0, c1, c2, 1.0});
}

RealPoly kk_printed_poly(int n, int l, Alpha alpha) {
    const double a = alpha.value;
    const double N = n, L = l;
    double c3 = 2 * N * N * N - 6 * N * N + 6 * N - 2 - a * L + 7 * a + 2 * L;
    double c2 = N * N - 6 * N + 6 + a * (13 * N * N - 31 * N + 18) +
                L * (5 * a * N - 8 * a + L - 2 * N + 2);
    double c1 = -2 * N * N + 6 * N - 4 + a * (19 * N * N - 38 * N + 21) +
                L * (-34 * a * N + 34 * a - 2 * L + 3) + 10 * a * N * N * N -
                52 * a * N * N + 78 * a * N - 36 * a + 26 * a * L * N - 20 * a * L + L * L;
    double a2 = a * a, a3 = a2 * a, a4 = a3 * a;
    double c0 = 4 * a4 * L * N * N * N - 20 * a4 * L * N * N + 32 * a4 * L * N - 16 * a4 * L +
                4 * a4 * N * N * N * N - 20 * a4 * N * N * N + 36 * a4 * N * N - 28 * a4 * N +
                8 * a4 - 4 * a3 * L * L * N + 6 * a3 * L * L - 4 * a3 * L * N * N * N +
                34 * a3 * L * N * N - 70 * a3 * L * N + 40 * a3 * L - 4 * a3 * N * N * N * N +
                28 * a3 * N * N * N - 64 * a3 * N * N + 60 * a3 * N - 20 * a3 +
                8 * a2 * L * L * N - 13 * a2 * L * L + a2 * L * N * N * N -
                22 * a2 * L * N * N + 57 * a2 * L * N - 36 * a2 * L + a2 * N * N * N * N -
                13 * a2 * N * N * N + 41 * a2 * N * N - 47 * a2 * N + 18 * a2 -
                5 * a * L * L * N + 9 * a * L * L + 7 * a * L * N * N - 21 * a * L * N +
                14 * a * L + 2 * a * N * N * N - 11 * a * N * N + 16 * a * N - 7 * a +
                L * L * N - 2 * L * L - L * N * N + 3 * L * N - 2 * L + N * N - 2 * N + 1;
    return RealPoly({c0, c1, c2, c3, 1.0});
}

RealPoly pineapple_quotient_poly(int p, int q, Alpha alpha) {
    Graph g = make_pineapple(p, q);
    return char_poly(quotient_matrix(l_alpha_matrix(g, alpha), pineapple_partition(p, q)));
}

RealPoly kk_quotient_poly(int n, int l, Alpha alpha) {
    Graph g = make_kk_graph(n, l);
    return char_poly(quotient_matrix(l_alpha_matrix(g, alpha), kk_graph_partition(n, l)));
}

} // namespace lalpha::thm
