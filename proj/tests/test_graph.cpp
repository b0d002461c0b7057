#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "error.hpp"
#include "graph.hpp"
#include "graph_spec.hpp"
#include "helpers.hpp"

using namespace lalpha;
using testutil::isomorphic;

TEST_CASE("graph construction validates invariants") {
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);          // loop
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);  // duplicate
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);          // out of range
    auto g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    int degsum = 0;
    for (int d : g.degrees()) degsum += d;
    CHECK(degsum == 2 * g.size());
}

TEST_CASE("named families") {
    CHECK(make_complete(3).size() == 3);
    auto p2 = make_path(2);
    CHECK(p2.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(isomorphic(make_complete_bipartite(2, 2), make_cycle(4)));
    CHECK(make_complete(1).size() == 0);
    CHECK(make_empty(4).size() == 0);
    CHECK(make_star(5).degree(0) == 4);
    CHECK(make_named("cycle", {5}).size() == 5);
    CHECK_THROWS_AS(make_cycle(2), Error);
    CHECK_THROWS_AS(make_complete_bipartite(0, 1), Error);
    CHECK_THROWS_AS(make_named("wheel", {4}), Error);
    CHECK_THROWS_AS(make_named("complete", {1, 2}), Error);
}

TEST_CASE("pineapple graph") {
    auto g = make_pineapple(3, 1);
    CHECK(g.order() == 4);
    CHECK(g.size() == 4);
    CHECK(g.degrees() == std::vector<int>{2, 2, 3, 1});
    CHECK(g.degree(2) == 3);  // apex = p - 1, degree p + q - 1

    auto fig = make_pineapple(5, 3);
    CHECK(fig.order() == 8);
    CHECK(fig.size() == 13);

    CHECK_THROWS_AS(make_pineapple(2, 1), Error);
    CHECK_THROWS_AS(make_pineapple(3, 0), Error);
}

TEST_CASE("H graph") {
    auto fig = make_h_graph(5, 2);
    CHECK(fig.order() == 10);
    CHECK(fig.size() == 22);

    CHECK(make_h_graph(3, 1).degrees() == std::vector<int>{3, 2, 2, 3, 2, 2});

    // l = n gives the prism: K_3 x K_2 under the cartesian product
    CHECK(isomorphic(make_h_graph(3, 3), graph_cartesian(make_complete(3), make_complete(2))));
    CHECK_THROWS_AS(make_h_graph(2, 1), Error);
    CHECK_THROWS_AS(make_h_graph(3, 4), Error);
}

TEST_CASE("KK graph") {
    auto fig = make_kk_graph(5, 2);
    CHECK(fig.order() == 10);
    CHECK(fig.size() == 22);
    CHECK(make_kk_graph(3, 1).degree(0) == 3);  // hub degree n + l - 1
    CHECK(make_kk_graph(3, 3).degrees() == std::vector<int>{5, 2, 2, 3, 3, 3});
    CHECK_THROWS_AS(make_kk_graph(3, 0), Error);
}

TEST_CASE("core-satellite graph") {
    CHECK(isomorphic(make_core_satellite(1, 1, 4), make_star(5)));
    auto g = make_core_satellite(2, 1, 2);
    CHECK(g.order() == 4);
    CHECK(g.degrees() == std::vector<int>{3, 3, 2, 2});

    // edge-identical to the explicit join construction
    Graph sats = graph_union(make_complete(2), make_complete(2));
    Graph direct = graph_join(make_complete(3), graph_union(sats, make_complete(2)));
    auto theta = make_core_satellite(3, 2, 3);
    CHECK(theta.edges() == direct.edges());
    CHECK_THROWS_AS(make_core_satellite(1, 1, 1), Error);
}

TEST_CASE("splitting graph") {
    CHECK(isomorphic(make_splitting(make_complete(2)), make_path(4)));
    CHECK(make_splitting(make_empty(3)).order() == 6);
    CHECK(make_splitting(make_empty(3)).size() == 0);

    auto sp3 = make_splitting(make_path(3));
    CHECK(sp3.order() == 6);
    CHECK(sp3.size() == 6);

    auto g = make_cycle(5);
    auto s = make_splitting(g);
    CHECK(s.size() == 3 * g.size());
    for (int v = 0; v < g.order(); ++v) {
        CHECK(s.degree(v) == 2 * g.degree(v));
        CHECK(s.degree(v + g.order()) == g.degree(v));
    }
}

TEST_CASE("binary operations: small identities") {
    auto k1 = make_complete(1), k2 = make_complete(2);
    CHECK(graph_union(k2, k2).size() == 2);
    CHECK(graph_union(k1, k1).size() == 0);
    CHECK(graph_union(make_cycle(3), make_path(2)).order() == 5);
    CHECK(graph_union(make_cycle(3), make_path(2)).size() == 4);

    CHECK(isomorphic(graph_join(k1, k1), k2));
    CHECK(isomorphic(graph_join(k2, k1), make_complete(3)));
    CHECK(isomorphic(graph_join(make_empty(2), make_empty(3)), make_complete_bipartite(2, 3)));

    CHECK(isomorphic(graph_cartesian(k2, k2), make_cycle(4)));
    auto g = make_pineapple(4, 2);
    CHECK(graph_cartesian(g, k1).edges() == g.edges());  // identity factor keeps labels

    CHECK(isomorphic(graph_direct(k2, k2), graph_union(k2, k2)));
    CHECK(graph_direct(g, make_empty(3)).size() == 0);

    CHECK(isomorphic(graph_strong(k2, k2), make_complete(4)));
    CHECK(graph_strong(g, k1).edges() == g.edges());
}

TEST_CASE("product edge counts and strong decomposition") {
    std::mt19937 seeds(7);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = erdos_renyi(3 + trial % 3, seeds());
        Graph h = erdos_renyi(2 + trial % 4, seeds());
        long n1 = g.order(), n2 = h.order(), m1 = g.size(), m2 = h.size();
        CHECK(graph_union(g, h).size() == m1 + m2);
        CHECK(graph_join(g, h).size() == m1 + m2 + n1 * n2);
        auto cart = graph_cartesian(g, h);
        auto dir = graph_direct(g, h);
        auto strong = graph_strong(g, h);
        CHECK(cart.size() == n1 * m2 + n2 * m1);
        CHECK(dir.size() == 2 * m1 * m2);
        CHECK(strong.size() == cart.size() + dir.size());
        std::set<std::pair<int, int>> cart_edges(cart.edges().begin(), cart.edges().end());
        for (auto e : dir.edges()) CHECK(!cart_edges.count(e));
        std::set<std::pair<int, int>> all(cart.edges().begin(), cart.edges().end());
        all.insert(dir.edges().begin(), dir.edges().end());
        std::set<std::pair<int, int>> strong_edges(strong.edges().begin(), strong.edges().end());
        CHECK(all == strong_edges);
    }
}

TEST_CASE("coalescence") {
    auto p2 = make_path(2);
    CHECK(isomorphic(graph_coalesce(p2, 1, p2, 0), make_path(3)));

    auto g = make_pineapple(4, 1);
    CHECK(isomorphic(graph_coalesce(make_complete(1), 0, g, 2), g));

    auto bowtie = graph_coalesce(make_cycle(3), 0, make_cycle(3), 0);
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.size() == 6);
    CHECK(bowtie.degree(0) == 4);  // merged vertex first, degree d_G(u) + d_H(v)

    CHECK_THROWS_AS(graph_coalesce(p2, 2, p2, 0), Error);
}

TEST_CASE("structural report basics") {
    auto r = structural_report(make_cycle(5));
    CHECK(r.regular);
    CHECK(r.regular_degree == 2);
    CHECK(!r.bipartite);
    CHECK(r.connected);
    CHECK(r.twin_classes.empty());

    auto star = structural_report(make_star(5));
    REQUIRE(star.twin_classes.size() == 1);
    CHECK(star.twin_classes[0].kind == TwinClass::Kind::false_twin);
    CHECK(star.twin_classes[0].vertices.size() == 4);
    CHECK(star.twin_classes[0].degree == 1);

    auto k4 = structural_report(make_complete(4));
    REQUIRE(k4.twin_classes.size() == 1);
    CHECK(k4.twin_classes[0].kind == TwinClass::Kind::true_twin);
    CHECK(k4.twin_classes[0].vertices.size() == 4);
    CHECK(k4.twin_classes[0].degree == 3);

    auto b = structural_report(make_complete_bipartite(2, 3));
    CHECK(b.bipartite);
    CHECK(b.side == std::vector<int>{0, 0, 1, 1, 1});
    CHECK(!structural_report(graph_union(make_complete(2), make_complete(2))).connected);
}

TEST_CASE("twin classes match exhaustive pair checks") {
    auto adj_equal = [](const Graph& g, int u, int v, bool closed) {
        auto lists = g.neighbor_lists();
        auto nu = lists[u], nv = lists[v];
        if (closed) {
            nu.insert(std::lower_bound(nu.begin(), nu.end(), u), u);
            nv.insert(std::lower_bound(nv.begin(), nv.end(), v), v);
        }
        return nu == nv;
    };
    std::mt19937 seeds(11);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = erdos_renyi(4 + trial % 6, seeds());
        auto report = structural_report(g);
        std::set<std::pair<int, int>> reported_true, reported_false;
        for (const auto& tc : report.twin_classes) {
            for (size_t i = 0; i < tc.vertices.size(); ++i)
                for (size_t j = i + 1; j < tc.vertices.size(); ++j) {
                    auto pair = std::make_pair(tc.vertices[i], tc.vertices[j]);
                    (tc.kind == TwinClass::Kind::true_twin ? reported_true : reported_false)
                        .insert(pair);
                    CHECK(g.degree(tc.vertices[i]) == tc.degree);
                }
        }
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                CHECK(adj_equal(g, u, v, true) == bool(reported_true.count({u, v})));
                bool false_twin = !g.has_edge(u, v) && adj_equal(g, u, v, false);
                CHECK(false_twin == bool(reported_false.count({u, v})));
            }
    }
}

TEST_CASE("edge list round trip and parse errors") {
    auto g = make_pineapple(4, 2);
    auto text = format_edge_list(g);
    auto back = parse_edge_list(text);
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());

    CHECK(parse_edge_list("# comment\n3\n\n0 1\n# another\n1 2\n").size() == 2);
    CHECK(parse_edge_list("0\n").order() == 0);

    CHECK_THROWS_AS(parse_edge_list(""), Error);
    CHECK_THROWS_AS(parse_edge_list("2\n0 0\n"), Error);  // loop
    CHECK_THROWS_AS(parse_edge_list("2\n1 0\n"), Error);  // u < v required
    CHECK_THROWS_AS(parse_edge_list("2\n0 1\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("2\n0 2\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1 5\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("x\n"), Error);
}

TEST_CASE("graph spec parser") {
    CHECK(parse_graph_spec("k5").graph.size() == 10);
    CHECK(parse_graph_spec("c4").graph.size() == 4);
    CHECK(parse_graph_spec("p3").graph.size() == 2);
    CHECK(parse_graph_spec("e3").graph.size() == 0);
    CHECK(parse_graph_spec("star6").graph.degree(0) == 5);
    CHECK(parse_graph_spec("kpq3_2").graph.size() == 6);
    CHECK(parse_graph_spec("pine5_3").graph.size() == 13);
    CHECK(parse_graph_spec("h5,2").graph.size() == 22);
    CHECK(parse_graph_spec("kk5_2").graph.size() == 22);
    CHECK(parse_graph_spec("theta3_2_3").graph.order() == 9);
    CHECK(parse_graph_spec("er6_1").graph.order() == 6);
    CHECK(is_connected(parse_graph_spec("cer6_3").graph));
    // deterministic across calls
    CHECK(parse_graph_spec("er6_1").graph.edges() == parse_graph_spec("er6_1").graph.edges());
    CHECK_THROWS_AS(parse_graph_spec("zzz"), Error);
    CHECK_THROWS_AS(parse_graph_spec("k"), Error);
    CHECK_THROWS_AS(parse_graph_spec("kpq3"), Error);
}
