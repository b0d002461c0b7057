#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "error.hpp"

namespace lalpha {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) fail(Errc::parameter_out_of_range, "vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::invalid_vertex, "edge endpoint out of range: {" + std::to_string(u) +
                                           "," + std::to_string(v) + "} with n=" + std::to_string(n));
        if (u == v)
            fail(Errc::parameter_out_of_range, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(Errc::parameter_out_of_range, "duplicate edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.degrees_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
        ++g.degrees_[u];
        ++g.degrees_[v];
    }
    return g;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) fail(Errc::invalid_vertex, "vertex " + std::to_string(v));
    return degrees_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::neighbor_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

// ---- named families ----

Graph make_complete(int n) {
    if (n < 0) fail(Errc::parameter_out_of_range, "complete: n >= 0 required");
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph make_path(int n) {
    if (n < 0) fail(Errc::parameter_out_of_range, "path: n >= 0 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) fail(Errc::parameter_out_of_range, "cycle: n >= 3 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(e));
}

Graph make_complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) fail(Errc::parameter_out_of_range, "complete_bipartite: p,q >= 1 required");
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(p) * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return Graph::from_edges(p + q, std::move(e));
}

Graph make_star(int n) {
    if (n < 0) fail(Errc::parameter_out_of_range, "star: n >= 0 required");
    if (n <= 1) return make_empty(n);
    return make_complete_bipartite(1, n - 1);
}

Graph make_empty(int n) {
    if (n < 0) fail(Errc::parameter_out_of_range, "empty: n >= 0 required");
    return Graph::from_edges(n, {});
}

Graph make_named(const std::string& family, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            fail(Errc::parameter_out_of_range,
                 family + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (family == "complete") { want(1); return make_complete(params[0]); }
    if (family == "path") { want(1); return make_path(params[0]); }
    if (family == "cycle") { want(1); return make_cycle(params[0]); }
    if (family == "complete_bipartite") { want(2); return make_complete_bipartite(params[0], params[1]); }
    if (family == "star") { want(1); return make_star(params[0]); }
    if (family == "empty") { want(1); return make_empty(params[0]); }
    fail(Errc::parameter_out_of_range, "unknown family: " + family);
}

Graph make_pineapple(int p, int q) {
    if (p < 3 || q < 1) fail(Errc::parameter_out_of_range, "pineapple: p >= 3 and q >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) e.emplace_back(i, j);
    for (int t = 0; t < q; ++t) e.emplace_back(p - 1, p + t);
    return Graph::from_edges(p + q, std::move(e));
}

Graph make_h_graph(int n, int l) {
    if (n < 3 || l < 1 || l > n)
        fail(Errc::parameter_out_of_range, "h_graph: n >= 3 and 1 <= l <= n required");
    std::vector<std::pair<int, int>> e;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(c * n + i, c * n + j);
    for (int i = 0; i < l; ++i) e.emplace_back(i, n + i);
    return Graph::from_edges(2 * n, std::move(e));
}

Graph make_kk_graph(int n, int l) {
    if (n < 3 || l < 1 || l > n)
        fail(Errc::parameter_out_of_range, "kk_graph: n >= 3 and 1 <= l <= n required");
    std::vector<std::pair<int, int>> e;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(c * n + i, c * n + j);
    for (int i = 0; i < l; ++i) e.emplace_back(0, n + i);
    return Graph::from_edges(2 * n, std::move(e));
}

Graph make_core_satellite(int c, int s, int eta) {
    if (c < 1 || s < 1 || eta < 2)
        fail(Errc::parameter_out_of_range, "core_satellite: c,s >= 1 and eta >= 2 required");
    Graph satellites = make_empty(0);
    for (int t = 0; t < eta; ++t) satellites = graph_union(satellites, make_complete(s));
    return graph_join(make_complete(c), satellites);
}

Graph make_splitting(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> e(g.edges());
    for (auto [u, v] : g.edges()) {
        e.emplace_back(v, u + n);  // shadow of u sees N(u)
        e.emplace_back(u, v + n);
    }
    return Graph::from_edges(2 * n, std::move(e));
}

// ---- binary operations ----

Graph graph_union(const Graph& g, const Graph& h) {
    const int n1 = g.order();
    std::vector<std::pair<int, int>> e(g.edges());
    for (auto [u, v] : h.edges()) e.emplace_back(u + n1, v + n1);
    return Graph::from_edges(n1 + h.order(), std::move(e));
}

Graph graph_join(const Graph& g, const Graph& h) {
    const int n1 = g.order(), n2 = h.order();
    std::vector<std::pair<int, int>> e(g.edges());
    for (auto [u, v] : h.edges()) e.emplace_back(u + n1, v + n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) e.emplace_back(i, n1 + j);
    return Graph::from_edges(n1 + n2, std::move(e));
}

Graph graph_cartesian(const Graph& g, const Graph& h) {
    const int n1 = g.order(), n2 = h.order();
    auto idx = [n2](int i, int j) { return i * n2 + j; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n1; ++i)
        for (auto [a, b] : h.edges()) e.emplace_back(idx(i, a), idx(i, b));
    for (int j = 0; j < n2; ++j)
        for (auto [a, b] : g.edges()) e.emplace_back(idx(a, j), idx(b, j));
    return Graph::from_edges(n1 * n2, std::move(e));
}

Graph graph_direct(const Graph& g, const Graph& h) {
    const int n1 = g.order(), n2 = h.order();
    auto idx = [n2](int i, int j) { return i * n2 + j; };
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges())
        for (auto [c, d] : h.edges()) {
            e.emplace_back(idx(a, c), idx(b, d));
            e.emplace_back(idx(a, d), idx(b, c));
        }
    return Graph::from_edges(n1 * n2, std::move(e));
}

Graph graph_strong(const Graph& g, const Graph& h) {
    auto cart = graph_cartesian(g, h);
    auto dir = graph_direct(g, h);
    std::vector<std::pair<int, int>> e(cart.edges());
    e.insert(e.end(), dir.edges().begin(), dir.edges().end());
    return Graph::from_edges(g.order() * h.order(), std::move(e));
}

Graph graph_coalesce(const Graph& g, int u, const Graph& h, int v) {
    const int n1 = g.order(), n2 = h.order();
    if (u < 0 || u >= n1) fail(Errc::invalid_vertex, "coalesce: u=" + std::to_string(u));
    if (v < 0 || v >= n2) fail(Errc::invalid_vertex, "coalesce: v=" + std::to_string(v));
    auto gmap = [u](int w) { return w == u ? 0 : 1 + (w < u ? w : w - 1); };
    auto hmap = [v, n1](int x) { return x == v ? 0 : n1 + (x < v ? x : x - 1); };
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges()) e.emplace_back(gmap(a), gmap(b));
    for (auto [a, b] : h.edges()) e.emplace_back(hmap(a), hmap(b));
    return Graph::from_edges(n1 + n2 - 1, std::move(e));
}

// ---- structure ----

bool is_regular(const Graph& g, int* k) {
    const auto& d = g.degrees();
    int deg = g.order() > 0 ? d[0] : 0;
    for (int x : d)
        if (x != deg) return false;
    if (k) *k = deg;
    return true;
}

bool is_bipartite(const Graph& g, std::vector<int>* side) {
    const int n = g.order();
    auto adj = g.neighbor_lists();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : adj[x]) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = std::move(color);
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    auto adj = g.neighbor_lists();
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                queue.push_back(y);
            }
    }
    return count == n;
}

// Twin classes are the size >= 2 equivalence classes of exact neighborhood
// equality: closed neighborhoods for true twins, open for false twins.
// Adjacency decides the kind, so a vertex lands in at most one class.
static void collect_twin_classes(const Graph& g, std::vector<TwinClass>& out) {
    const int n = g.order();
    auto adj = g.neighbor_lists();

    std::map<std::vector<int>, std::vector<int>> open_classes, closed_classes;
    for (int v = 0; v < n; ++v) {
        open_classes[adj[v]].push_back(v);
        std::vector<int> closed(adj[v]);
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        closed_classes[closed].push_back(v);
    }
    for (auto& [nbhd, verts] : closed_classes)
        if (verts.size() >= 2)
            out.push_back({TwinClass::Kind::true_twin, verts, g.degree(verts[0])});
    for (auto& [nbhd, verts] : open_classes)
        if (verts.size() >= 2)
            out.push_back({TwinClass::Kind::false_twin, verts, g.degree(verts[0])});
    std::sort(out.begin(), out.end(),
              [](const TwinClass& a, const TwinClass& b) { return a.vertices < b.vertices; });
}

StructuralReport structural_report(const Graph& g) {
    StructuralReport r;
    r.degrees = g.degrees();
    r.regular = is_regular(g, &r.regular_degree);
    r.bipartite = is_bipartite(g, &r.side);
    if (!r.bipartite) r.side.clear();
    r.connected = is_connected(g);
    collect_twin_classes(g, r.twin_classes);
    return r;
}

// ---- edge-list I/O ----

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                fail(Errc::parse_error, "line " + std::to_string(lineno) + ": invalid vertex count");
            std::string rest;
            if (ls >> rest)
                fail(Errc::parse_error, "line " + std::to_string(lineno) + ": trailing tokens after vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected \"u v\"");
        std::string rest;
        if (ls >> rest)
            fail(Errc::parse_error, "line " + std::to_string(lineno) + ": trailing tokens");
        if (u == v) fail(Errc::parse_error, "line " + std::to_string(lineno) + ": loop edge");
        if (!(0 <= u && u < v && v < n))
            fail(Errc::parse_error,
                 "line " + std::to_string(lineno) + ": requires 0 <= u < v < n");
        edges.emplace_back(u, v);
    }
    if (n < 0) fail(Errc::parse_error, "missing vertex-count header");
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::parse_error, "duplicate edge line");
    return Graph::from_edges(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open " + path);
    return read_edge_list(in);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
    write_edge_list(g, out);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

} // namespace lalpha
