#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "layerbeta/errors.hpp"
#include "layerbeta/jet2.hpp"
#include "layerbeta/taylor_jet.hpp"

using namespace layerbeta;

// ===========================================================================
// univariate truncated series
// ===========================================================================

TEST_CASE("series product and derivative follow the calculus rules", "[taylor]") {
    TaylorJet f(5), g(5);
    for (std::size_t k = 0; k <= 5; ++k) {
        f.at(k) = 1.0 / (1.0 + k);
        g.at(k) = (k % 2 == 0) ? 0.5 * k : -1.0;
    }
    // (fg)' = f'g + fg' as truncated series.
    TaylorJet lhs = derivative(f * g);
    TaylorJet rhs = derivative(f) * g + f * derivative(g);
    for (std::size_t k = 0; k <= lhs.order(); ++k)
        CHECK(std::abs(lhs[k] - rhs[k]) < 1e-14);
}

TEST_CASE("pow_jet inverts and halves consistently", "[taylor]") {
    TaylorJet f(8);
    f.at(0) = 2.0;
    f.at(1) = -1.0;
    f.at(2) = 0.5;
    f.at(3) = 0.25;
    f.at(5) = -0.125;

    TaylorJet sq = pow_jet(f, 2.0);
    TaylorJet ff = f * f;
    for (std::size_t k = 0; k <= 8; ++k)
        CHECK(std::abs(sq[k] - ff[k]) < 1e-13);

    TaylorJet root = pow_jet(f, 0.5);
    TaylorJet back = root * root;
    for (std::size_t k = 0; k <= 8; ++k)
        CHECK(std::abs(back[k] - f[k]) < 1e-13);

    TaylorJet inv = pow_jet(f, -1.0);
    TaylorJet one = inv * f;
    CHECK(std::abs(one[0] - 1.0) < 1e-14);
    for (std::size_t k = 1; k <= 8; ++k)
        CHECK(std::abs(one[k]) < 1e-13);

    TaylorJet bad = TaylorJet::constant(-1.0, 3);
    CHECK_THROWS_AS(pow_jet(bad, 0.5), DomainError);
}

TEST_CASE("pow_jet reproduces the binomial series", "[taylor]") {
    // (1+x)^{-1/2} = 1 - x/2 + 3x^2/8 - 5x^3/16 + 35x^4/128 - ...
    TaylorJet f(4);
    f.at(0) = 1.0;
    f.at(1) = 1.0;
    TaylorJet g = pow_jet(f, -0.5);
    const double expect[5] = {1.0, -0.5, 0.375, -0.3125, 0.2734375};
    for (std::size_t k = 0; k <= 4; ++k)
        CHECK(std::abs(g[k] - expect[k]) < 1e-15);
}

TEST_CASE("series reversion recovers the Catalan numbers", "[taylor]") {
    // Inverse of u = x - x^2 is the Catalan generating function
    // v = x + x^2 + 2x^3 + 5x^4 + 14x^5 + 42x^6 + 132x^7 + 429x^8.
    TaylorJet u(8);
    u.at(1) = 1.0;
    u.at(2) = -1.0;
    TaylorJet v = revert(u);
    const double catalan[9] = {0, 1, 1, 2, 5, 14, 42, 132, 429};
    for (std::size_t k = 0; k <= 8; ++k)
        CHECK(std::abs(v[k] - catalan[k]) < 1e-11);
}

TEST_CASE("series reversion is a two-sided inverse", "[taylor]") {
    TaylorJet u(8);
    u.at(1) = 0.7;
    u.at(2) = -0.3;
    u.at(3) = 0.11;
    u.at(4) = 0.05;
    u.at(5) = -0.21;
    u.at(6) = 0.02;
    u.at(7) = 0.008;
    u.at(8) = -0.001;
    TaylorJet v = revert(u);
    TaylorJet comp = compose(u, v);
    CHECK(std::abs(comp[1] - 1.0) < 1e-13);
    for (std::size_t k = 2; k <= 8; ++k) {
        INFO("coefficient " << k);
        CHECK(std::abs(comp[k]) < 1e-12);
    }
    TaylorJet comp2 = compose(v, u);
    CHECK(std::abs(comp2[1] - 1.0) < 1e-13);
    for (std::size_t k = 2; k <= 8; ++k)
        CHECK(std::abs(comp2[k]) < 1e-12);
}

// ===========================================================================
// bivariate jets to total degree 4
// ===========================================================================

TEST_CASE("bivariate product expands binomials", "[jet2]") {
    Jet2 xy = Jet2::variable_x() + Jet2::variable_y();
    Jet2 sq = xy * xy;
    CHECK(sq.coeff(2, 0) == 1.0);
    CHECK(sq.coeff(1, 1) == 2.0);
    CHECK(sq.coeff(0, 2) == 1.0);
    Jet2 fourth = sq * sq;
    CHECK(fourth.coeff(4, 0) == 1.0);
    CHECK(fourth.coeff(3, 1) == 4.0);
    CHECK(fourth.coeff(2, 2) == 6.0);
    CHECK(fourth.coeff(1, 3) == 4.0);
    CHECK(fourth.coeff(0, 4) == 1.0);
}

TEST_CASE("bivariate evaluation matches direct arithmetic", "[jet2]") {
    Jet2 f;
    f.coeff(0, 0) = 0.3;
    f.coeff(1, 0) = -1.0;
    f.coeff(0, 1) = 2.0;
    f.coeff(2, 0) = 0.5;
    f.coeff(1, 1) = -0.25;
    f.coeff(0, 4) = 1.5;
    double x = 0.3, y = -0.7;
    double direct = 0.3 - x + 2 * y + 0.5 * x * x - 0.25 * x * y +
                    1.5 * y * y * y * y;
    CHECK(std::abs(f.eval(x, y) - direct) < 1e-15);
}

TEST_CASE("bivariate composition respects ring structure", "[jet2]") {
    Jet2 p = 0.4 * Jet2::variable_x() - 0.9 * Jet2::variable_y();
    p.coeff(2, 0) = 0.2;
    p.coeff(1, 1) = -0.15;
    Jet2 q = 1.1 * Jet2::variable_y();
    q.coeff(0, 2) = 0.3;
    q.coeff(2, 1) = 0.05;

    Jet2 f, g;
    f.coeff(1, 0) = 1.0;
    f.coeff(0, 2) = -2.0;
    g.coeff(0, 1) = 3.0;
    g.coeff(2, 0) = 0.7;

    // compose(fg) = compose(f) compose(g)
    Jet2 lhs = compose(f * g, p, q);
    Jet2 rhs = compose(f, p, q) * compose(g, p, q);
    for (std::size_t k = 0; k < Jet2::size; ++k)
        CHECK(std::abs(lhs.c[k] - rhs.c[k]) < 1e-13);
}

TEST_CASE("planar map reversion inverts a rotation exactly", "[jet2]") {
    double c = std::cos(0.37), s = std::sin(0.37);
    Jet2 U = c * Jet2::variable_x() - s * Jet2::variable_y();
    Jet2 V = s * Jet2::variable_x() + c * Jet2::variable_y();
    Jet2 X, Y;
    revert2(U, V, X, Y);
    CHECK(std::abs(X.coeff(1, 0) - c) < 1e-15);
    CHECK(std::abs(X.coeff(0, 1) - s) < 1e-15);
    CHECK(std::abs(Y.coeff(1, 0) + s) < 1e-15);
    CHECK(std::abs(Y.coeff(0, 1) - c) < 1e-15);
    for (std::size_t d = 2; d <= 4; ++d)
        for (std::size_t j = 0; j <= d; ++j) {
            CHECK(std::abs(X.coeff(d - j, j)) < 1e-14);
            CHECK(std::abs(Y.coeff(d - j, j)) < 1e-14);
        }
}

TEST_CASE("planar map reversion inverts a full nonlinear map", "[jet2]") {
    Jet2 U = 1.2 * Jet2::variable_x() + 0.3 * Jet2::variable_y();
    U.coeff(2, 0) = 0.4;
    U.coeff(1, 1) = -0.2;
    U.coeff(0, 3) = 0.15;
    U.coeff(2, 2) = -0.05;
    Jet2 V = -0.1 * Jet2::variable_x() + 0.9 * Jet2::variable_y();
    V.coeff(0, 2) = -0.35;
    V.coeff(3, 0) = 0.12;
    V.coeff(1, 2) = 0.08;
    V.coeff(4, 0) = -0.02;

    Jet2 X, Y;
    revert2(U, V, X, Y);
    Jet2 cu = compose(U, X, Y);
    Jet2 cv = compose(V, X, Y);
    CHECK(std::abs(cu.coeff(1, 0) - 1.0) < 1e-13);
    CHECK(std::abs(cv.coeff(0, 1) - 1.0) < 1e-13);
    for (std::size_t d = 0; d <= 4; ++d)
        for (std::size_t j = 0; j <= d; ++j) {
            if (d == 1) continue;
            INFO("degree " << d << ", y-power " << j);
            CHECK(std::abs(cu.coeff(d - j, j)) < 1e-13);
            CHECK(std::abs(cv.coeff(d - j, j)) < 1e-13);
        }
    CHECK(std::abs(cu.coeff(0, 1)) < 1e-13);
    CHECK(std::abs(cv.coeff(1, 0)) < 1e-13);

    Jet2 A = Jet2::variable_x();
    Jet2 B = 2.0 * Jet2::variable_x(); // linearly dependent rows
    Jet2 X2, Y2;
    CHECK_THROWS_AS(revert2(A, B, X2, Y2), DomainError);
}
