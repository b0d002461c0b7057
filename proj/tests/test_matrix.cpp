#include <doctest.h>

#include <random>

#include "error.hpp"
#include "matrix.hpp"

using namespace lalpha;

namespace {

// Integer-valued random matrices keep all Kronecker identities exact in
// floating point.
DenseMatrix random_int_matrix(int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-4, 4);
    DenseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

} // namespace

TEST_CASE("alpha validation") {
    CHECK(Alpha(0.0).value == 0.0);
    CHECK(Alpha(1.0).value == 1.0);
    CHECK_THROWS_AS(Alpha(-0.01), Error);
    CHECK_THROWS_AS(Alpha(1.01), Error);
}

TEST_CASE("adjacency and degree matrices") {
    auto a = adjacency_matrix(make_complete(2));
    CHECK(a.at(0, 1) == 1.0);
    CHECK(a.at(0, 0) == 0.0);

    CHECK(adjacency_matrix(make_empty(3)).frobenius_norm() == 0.0);

    auto p3 = adjacency_matrix(make_path(3));
    CHECK(p3.at(0, 1) == 1.0);
    CHECK(p3.at(1, 2) == 1.0);
    CHECK(p3.at(0, 2) == 0.0);

    auto d = degree_matrix(make_complete(3));
    for (int i = 0; i < 3; ++i) CHECK(d.at(i, i) == 2.0);
    auto ds = degree_matrix(make_star(4));
    CHECK(ds.at(0, 0) == 3.0);
    CHECK(ds.at(1, 1) == 1.0);

    auto dp = degree_matrix(make_pineapple(3, 1));
    CHECK(dp.at(0, 0) == 2.0);
    CHECK(dp.at(1, 1) == 2.0);
    CHECK(dp.at(2, 2) == 3.0);  // apex is vertex p-1
    CHECK(dp.at(3, 3) == 1.0);
}

TEST_CASE("l_alpha and a_alpha endpoints") {
    auto g = make_pineapple(4, 2);
    const int n = g.order();

    auto l1 = l_alpha_matrix(g, Alpha(1.0));
    auto d = degree_matrix(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(l1.at(i, j) == d.at(i, j));

    auto l0 = l_alpha_matrix(g, Alpha(0.0));
    auto a = adjacency_matrix(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(l0.at(i, j) == -a.at(i, j));

    auto lh = l_alpha_matrix(g, Alpha(0.5));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(lh.at(i, j) == doctest::Approx(0.5 * (d.at(i, j) - a.at(i, j))).epsilon(1e-15));

    auto ah = a_alpha_matrix(g, Alpha(0.5));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(ah.at(i, j) == doctest::Approx(0.5 * (d.at(i, j) + a.at(i, j))).epsilon(1e-15));
    auto a0 = a_alpha_matrix(g, Alpha(0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(a0.at(i, j) == a.at(i, j));
}

TEST_CASE("symmetric storage and submatrix") {
    SymMatrix m(3);
    m.set(0, 2, 5.0);
    CHECK(m.at(2, 0) == 5.0);
    m.set(1, 1, -2.0);
    auto sub = m.without_vertex(1);
    CHECK(sub.dim() == 2);
    CHECK(sub.at(0, 1) == 5.0);
    CHECK_THROWS_AS(m.without_vertex(3), Error);
}

TEST_CASE("kronecker identities") {
    CHECK(kronecker(DenseMatrix::identity(2), DenseMatrix::identity(3))
              .equals_exact(DenseMatrix::identity(6)));

    std::mt19937 rng(42);
    auto A = random_int_matrix(3, 3, rng);
    auto B = random_int_matrix(3, 3, rng);
    auto C = random_int_matrix(3, 3, rng);
    auto D = random_int_matrix(3, 3, rng);
    DenseMatrix zero(3, 3);

    // (1) scalar pull-through with a dyadic scalar
    CHECK(kronecker(0.5 * A, B).equals_exact(0.5 * kronecker(A, B)));
    CHECK(kronecker(A, 0.5 * B).equals_exact(0.5 * kronecker(A, B)));
    // (2) transpose
    CHECK(kronecker(A, B).transposed().equals_exact(kronecker(A.transposed(), B.transposed())));
    // (3) associativity
    CHECK(kronecker(kronecker(A, B), C).equals_exact(kronecker(A, kronecker(B, C))));
    // (4)(5) bilinearity
    CHECK(kronecker(A + B, C).equals_exact(kronecker(A, C) + kronecker(B, C)));
    CHECK(kronecker(A, B + C).equals_exact(kronecker(A, B) + kronecker(A, C)));
    // (6) zero annihilates
    CHECK(kronecker(A, zero).equals_exact(DenseMatrix(9, 9)));
    CHECK(kronecker(zero, A).equals_exact(DenseMatrix(9, 9)));
    // (8) mixed product
    CHECK((kronecker(A, B) * kronecker(C, D)).equals_exact(kronecker(A * C, B * D)));

    auto A2 = random_int_matrix(2, 2, rng);
    auto B2 = random_int_matrix(2, 2, rng);
    auto C2 = random_int_matrix(2, 2, rng);
    auto D2 = random_int_matrix(2, 2, rng);
    CHECK((kronecker(A2, B2) * kronecker(C2, D2)).equals_exact(kronecker(A2 * C2, B2 * D2)));
}

TEST_CASE("dense products") {
    DenseMatrix a(2, 3), b(3, 2);
    a.at(0, 0) = 1;
    a.at(0, 2) = 2;
    a.at(1, 1) = -1;
    b.at(0, 1) = 3;
    b.at(2, 0) = 4;
    auto c = a * b;
    CHECK(c.rows() == 2);
    CHECK(c.cols() == 2);
    CHECK(c.at(0, 0) == 8.0);
    CHECK(c.at(0, 1) == 3.0);
    CHECK(c.at(1, 0) == 0.0);
    CHECK_THROWS_AS(a * a, Error);
    CHECK(DenseMatrix::identity(3).trace() == 3.0);
}
