#include "graph_spec.hpp"

#include <cctype>
#include <random>

#include "error.hpp"

namespace lalpha {

Graph erdos_renyi(int n, unsigned seed) {
    if (n < 0) fail(Errc::parameter_out_of_range, "erdos_renyi: n >= 0 required");
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph connected_erdos_renyi(int n, unsigned seed) {
    for (unsigned attempt = 0;; ++attempt) {
        Graph g = erdos_renyi(n, seed * 1000u + attempt);
        if (is_connected(g)) return g;
    }
}

namespace {

std::vector<int> parse_params(const std::string& text, size_t pos, const std::string& spec) {
    std::vector<int> params;
    int current = 0;
    bool have_digit = false;
    for (size_t i = pos; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            current = current * 10 + (ch - '0');
            have_digit = true;
        } else if ((ch == '_' || ch == ',') && have_digit) {
            params.push_back(current);
            current = 0;
            have_digit = false;
        } else {
            fail(Errc::parse_error, "bad graph spec: " + spec);
        }
    }
    if (!have_digit) fail(Errc::parse_error, "bad graph spec: " + spec);
    params.push_back(current);
    return params;
}

} // namespace

GraphSpec parse_graph_spec(const std::string& text) {
    struct Family {
        const char* prefix;
        size_t arity;
    };
    // Longest-prefix first so kpq/kk shadow k, cer shadows c, and so on.
    static const Family families[] = {
        {"theta", 3}, {"star", 1}, {"pine", 2}, {"kpq", 2}, {"cer", 2}, {"kk", 2},
        {"er", 2},    {"k", 1},    {"p", 1},    {"c", 1},   {"e", 1},   {"h", 2},
    };
    for (const auto& f : families) {
        std::string prefix(f.prefix);
        if (text.rfind(prefix, 0) != 0) continue;
        if (text.size() <= prefix.size() ||
            !std::isdigit(static_cast<unsigned char>(text[prefix.size()])))
            continue;
        auto params = parse_params(text, prefix.size(), text);
        if (params.size() != f.arity)
            fail(Errc::parse_error, "graph spec " + text + " expects " +
                                        std::to_string(f.arity) + " parameter(s)");
        GraphSpec gs{text, prefix, params, Graph{}};
        if (prefix == "k") gs.graph = make_complete(params[0]);
        else if (prefix == "p") gs.graph = make_path(params[0]);
        else if (prefix == "c") gs.graph = make_cycle(params[0]);
        else if (prefix == "e") gs.graph = make_empty(params[0]);
        else if (prefix == "star") gs.graph = make_star(params[0]);
        else if (prefix == "kpq") gs.graph = make_complete_bipartite(params[0], params[1]);
        else if (prefix == "pine") gs.graph = make_pineapple(params[0], params[1]);
        else if (prefix == "h") gs.graph = make_h_graph(params[0], params[1]);
        else if (prefix == "kk") gs.graph = make_kk_graph(params[0], params[1]);
        else if (prefix == "theta") gs.graph = make_core_satellite(params[0], params[1], params[2]);
        else if (prefix == "er") gs.graph = erdos_renyi(params[0], unsigned(params[1]));
        else if (prefix == "cer") gs.graph = connected_erdos_renyi(params[0], unsigned(params[1]));
        return gs;
    }
    fail(Errc::parse_error, "unrecognized graph spec: " + text);
}

} // namespace lalpha
