#include <doctest.h>

#include <cmath>

#include "error.hpp"
#include "partition.hpp"
#include "theorems.hpp"

using namespace lalpha;

TEST_CASE("partition validation") {
    CHECK(Partition::singletons(4).block_count() == 4);
    CHECK(Partition::single_block(4).block_count() == 1);
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), Error);          // not covering
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), Error);  // overlap
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), Error);   // empty block
    CHECK_THROWS_AS(Partition(3, {{0, 1, 3}}), Error);       // out of range
}

TEST_CASE("quotient of the singleton partition is the matrix itself") {
    auto m = l_alpha_matrix(make_pineapple(3, 2), Alpha(0.4));
    auto q = quotient_matrix(m, Partition::singletons(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) CHECK(q.at(i, j) == m.at(i, j));

    auto full = quotient_spectrum(m, Partition::singletons(m.dim()));
    auto oracle = eigen_sym(m).spectrum;
    CHECK(compare_spectra(full, oracle, 1e-9).pass);
}

TEST_CASE("single-block quotient of K_3 is the constant row sum") {
    for (double a : {0.0, 0.25, 0.6, 1.0}) {
        auto m = l_alpha_matrix(make_complete(3), Alpha(a));
        auto q = quotient_matrix(m, Partition::single_block(3));
        CHECK(q.rows() == 1);
        CHECK(q.at(0, 0) == doctest::Approx(4 * a - 2).epsilon(1e-14));
    }
}

TEST_CASE("single-block quotient of a k-regular graph gives 2 alpha k - k") {
    auto g = make_cycle(6);
    for (double a : {0.0, 0.5, 0.9}) {
        auto s = quotient_spectrum(l_alpha_matrix(g, Alpha(a)), Partition::single_block(6));
        REQUIRE(s.order() == 1);
        CHECK(s.max_value() == doctest::Approx(2 * a * 2 - 2).epsilon(1e-12));
    }
}

TEST_CASE("bipartition quotient of K_{p,q}") {
    const int p = 2, q = 3;
    auto g = make_complete_bipartite(p, q);
    Partition part(p + q, {{0, 1}, {2, 3, 4}});
    for (double a : {0.0, 0.3, 0.8}) {
        auto m = quotient_matrix(l_alpha_matrix(g, Alpha(a)), part);
        CHECK(m.at(0, 0) == doctest::Approx(a * q).epsilon(1e-14));
        CHECK(m.at(0, 1) == doctest::Approx((a - 1) * q).epsilon(1e-14));
        CHECK(m.at(1, 0) == doctest::Approx((a - 1) * p).epsilon(1e-14));
        CHECK(m.at(1, 1) == doctest::Approx(a * p).epsilon(1e-14));
    }
    // alpha = 0: quotient [[0,-3],[-2,0]] has eigenvalues +-sqrt(6)
    auto s = quotient_spectrum(l_alpha_matrix(g, Alpha(0.0)), part);
    REQUIRE(s.order() == 2);
    CHECK(s.max_value() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
    CHECK(s.min_value() == doctest::Approx(-std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("non-equitable partitions are rejected with context") {
    auto m = l_alpha_matrix(make_path(3), Alpha(0.5));
    try {
        quotient_matrix(m, Partition(3, {{0, 1}, {2}}));
        FAIL("expected NotEquitable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_equitable);
        CHECK(std::string(e.what()).find("block pair") != std::string::npos);
    }
}

TEST_CASE("quotient spectra are contained in the full spectrum") {
    struct Case {
        Graph g;
        Partition p;
    };
    std::vector<Case> cases;
    cases.push_back({make_complete_bipartite(4, 2),
                     Partition(6, {{0, 1, 2, 3}, {4, 5}})});
    cases.push_back({make_pineapple(5, 2), thm::pineapple_partition(5, 2)});
    cases.push_back({make_h_graph(4, 2), thm::h_graph_partition(4, 2)});
    cases.push_back({make_kk_graph(4, 3), thm::kk_graph_partition(4, 3)});
    cases.push_back({make_kk_graph(4, 4), thm::kk_graph_partition(4, 4)});
    cases.push_back({make_cycle(8), Partition::single_block(8)});
    for (const auto& c : cases) {
        for (double a : {0.0, 0.2, 0.5, 0.9}) {
            auto m = l_alpha_matrix(c.g, Alpha(a));
            auto sub = quotient_spectrum(m, c.p);
            auto full = eigen_sym(m).values;
            for (double v : sub.expanded()) CHECK(membership_deviation(v, full) <= 1e-8);
        }
    }
}
