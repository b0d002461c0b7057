#include <doctest.h>

#include <cmath>
#include <random>

#include "eigen.hpp"
#include "error.hpp"
#include "poly.hpp"

using namespace lalpha;

TEST_CASE("polynomial arithmetic") {
    RealPoly xm1({-1.0, 1.0});
    RealPoly xp1({1.0, 1.0});
    auto prod = xm1 * xp1;
    CHECK(prod.coeffs() == std::vector<double>{-1.0, 0.0, 1.0});

    RealPoly zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.evaluate(123.0) == 0.0);
    CHECK((zero * xp1).degree() == -1);
    CHECK((xp1 + xm1).coeffs() == std::vector<double>{0.0, 2.0});
    CHECK((xp1 - xp1).degree() == -1);
    CHECK(RealPoly::monomial(3, 2.0).evaluate(2.0) == 16.0);
    CHECK(RealPoly::from_roots({1.0, -1.0}).coeffs() == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK_THROWS_AS(RealPoly::monomial(-1), Error);
}

TEST_CASE("x = 1 is always a root of the K_2 characteristic polynomial") {
    for (int i = 0; i <= 10; ++i) {
        double a = 0.1 * i;
        RealPoly p({2 * a - 1, -2 * a, 1.0});
        CHECK(std::fabs(p.evaluate(1.0)) < 1e-15);
    }
}

TEST_CASE("char_poly on small exact cases") {
    // L_alpha(K_2) = [[a, a-1], [a-1, a]] -> x^2 - 2 a x + (2a - 1)
    for (double a : {0.0, 0.3, 0.5, 1.0}) {
        SymMatrix m(2);
        m.set(0, 0, a);
        m.set(1, 1, a);
        m.set(0, 1, a - 1.0);
        auto p = char_poly(m);
        CHECK(p.degree() == 2);
        CHECK(p.coeff(2) == doctest::Approx(1.0));
        CHECK(p.coeff(1) == doctest::Approx(-2.0 * a).epsilon(1e-14));
        CHECK(p.coeff(0) == doctest::Approx(2.0 * a - 1.0).epsilon(1e-14));
    }

    auto z = char_poly(SymMatrix(3));
    CHECK(z.coeffs_descending() == std::vector<double>{1.0, 0.0, 0.0, 0.0});

    // frozen: char poly of L_0.5(P_3) is x^3 - 2x^2 + 0.75x
    auto p3 = char_poly(l_alpha_matrix(make_path(3), Alpha(0.5)));
    CHECK(p3.coeff(3) == doctest::Approx(1.0));
    CHECK(p3.coeff(2) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(p3.coeff(1) == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(std::fabs(p3.coeff(0)) < 1e-13);
}

TEST_CASE("char_poly root-sum equals trace") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> entry(-3.0, 3.0);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + trial;
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
        auto p = char_poly(m);
        CHECK(p.degree() == n);
        CHECK(p.leading() == 1.0);
        // Newton identity: sum of roots = -c_{n-1} = trace
        CHECK(std::fabs(-p.coeff(n - 1) - m.trace()) < 1e-8 * std::max(1.0, std::fabs(m.trace())));
    }
}

TEST_CASE("char_poly vanishes at eigenvalues within the scaled bound") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int n : {3, 5, 8, 10}) {
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
        auto p = char_poly(m);
        double bound = 1e-6 * std::pow(1.0 + m.frobenius_norm(), n);
        for (double lam : eigen_sym(m).values) CHECK(std::fabs(p.evaluate(lam)) <= bound);
    }
}

TEST_CASE("evaluation magnitude bounds the evaluation") {
    RealPoly p({3.0, -2.0, 0.5, 1.0});
    for (double x : {-2.0, 0.0, 0.7, 5.0})
        CHECK(std::fabs(p.evaluate(x)) <= p.evaluation_magnitude(x) + 1e-15);
}
