#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bsg/basis.hpp"

using namespace bsg;

TEST_CASE("config validation") {
    BasisConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n_modes = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.n_modes = 16;
    cfg.quad_points = 31;  // below 2*n_modes
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.quad_points = 32;
    cfg.tail_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("gauss-hermite rule integrates moments of e^{-x^2}") {
    const QuadratureRule r = gauss_hermite(24);
    double m0 = 0, m2 = 0, m4 = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        m0 += r.weights[i];
        m2 += r.weights[i] * r.nodes[i] * r.nodes[i];
        m4 += r.weights[i] * std::pow(r.nodes[i], 4);
    }
    const double sp = std::sqrt(M_PI);
    CHECK(m0 == doctest::Approx(sp).epsilon(1e-14));
    CHECK(m2 == doctest::Approx(0.5 * sp).epsilon(1e-14));
    CHECK(m4 == doctest::Approx(0.75 * sp).epsilon(1e-14));
}

TEST_CASE("gauss-legendre rules: interval map and composite panels") {
    const QuadratureRule r = gauss_legendre_ab(16, 1.0, 3.0);
    double s = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        s += r.weights[i] * r.nodes[i] * r.nodes[i];
    CHECK(s == doctest::Approx((27.0 - 1.0) / 3.0).epsilon(1e-14));

    const QuadratureRule c = composite_legendre({0.0, 0.5, 2.0}, 12);
    double e = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        e += c.weights[i] * std::exp(-c.nodes[i]);
    CHECK(e == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(composite_legendre({0.0}, 8), QuadratureUnderresolved);
}

TEST_CASE("oscillator eigenfunctions orthonormal for m,n <= 40") {
    // integrate the normalized eigenfunctions directly on a wide legendre
    // rule: the gauss-hermite weights at extreme nodes are below double
    // precision and cannot carry the e^{x^2/2} growth of the bare polynomials.
    // the window must clear the n = 40 turning point at x = 9 by a margin.
    const QuadratureRule r = gauss_legendre_ab(500, -12.0, 12.0);
    const int top = 41;
    std::vector<double> h(top);
    std::vector<std::vector<double>> tab(r.size(), std::vector<double>(top));
    for (std::size_t i = 0; i < r.size(); ++i) {
        hermite_fn_all(top, r.nodes[i], h.data());
        tab[i] = h;
    }
    double worst = 0;
    for (int m = 0; m <= 40; ++m)
        for (int n = m; n <= 40; ++n) {
            double s = 0;
            for (std::size_t i = 0; i < r.size(); ++i)
                s += r.weights[i] * tab[i][m] * tab[i][n];
            worst = std::max(worst, std::abs(s - (m == n ? 1.0 : 0.0)));
        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("uniform amplitude bound |phi_n| <= pi^{-1/4} up to n = 1000") {
    const double cap = std::pow(M_PI, -0.25) * (1.0 + 1e-12);
    std::vector<double> buf(1001);
    for (double x : {0.0, 0.3, 1.7, 5.0, 20.0, 44.0}) {
        hermite_fn_all(1001, x, buf.data());
        for (int n = 0; n <= 1000; ++n) {
            CAPTURE(n);
            CAPTURE(x);
            REQUIRE(std::abs(buf[n]) <= cap);
        }
    }
}

TEST_CASE("order cap enforced") {
    CHECK_THROWS_AS(hermite_fn(1001, 0.0), UnsupportedOrder);
    CHECK_THROWS_AS(hermite_fn(-1, 0.0), UnsupportedOrder);
}

TEST_CASE("central values phi_{2n}(0)^2 match the recurrence-free closed form") {
    std::vector<double> buf(201);
    hermite_fn_all(201, 0.0, buf.data());
    for (int n = 0; n <= 100; ++n)
        CHECK(phi2n_zero_sq(n) ==
              doctest::Approx(buf[2 * n] * buf[2 * n]).epsilon(1e-12));
}

TEST_CASE("closed-form squared overlaps vs quadrature, spot values") {
    const QuadratureRule r = gauss_hermite(64);
    CHECK(overlap_sq_closed(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(overlap_sq_closed(1, 1) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(overlap_sq_closed(0, 1) == 0.0);
    CHECK(overlap_sq_closed(3, 8) == 0.0);
    for (int m = 0; m <= 12; ++m)
        for (int n = m; n <= 12; n += 2) {
            const double o = overlap_gaussian(m, n, r);
            CHECK(o * o == doctest::Approx(overlap_sq_closed(m, n)).epsilon(1e-10));
        }
    CHECK_THROWS_AS(overlap_gaussian(40, 40, gauss_hermite(16)),
                    QuadratureUnderresolved);
}

TEST_CASE("overlap bound via central values, equality on the diagonal") {
    for (int m = 0; m <= 40; ++m)
        for (int n = m; n <= 40; n += 2) {
            if ((m + n) % 2 != 0) continue;
            const int s = (m + n) / 2;
            const double rhs = 0.5 * M_PI * std::pow(phi2n_zero_sq(s), 2);
            CHECK(overlap_sq_closed(m, n) <= rhs * (1.0 + 1e-13));
            if (m == n)
                CHECK(overlap_sq_closed(m, n) == doctest::Approx(rhs).epsilon(1e-12));
        }
}

TEST_CASE("scaled complementary error function: branch agreement and values") {
    CHECK(erfcx(1.0) == doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-15));
    // branch agreement at the asymptotic switch: both formulas at z = 15
    CHECK(std::exp(225.0) * std::erfc(15.0) ==
          doctest::Approx(erfcx(15.0)).epsilon(1e-13));
    // continuity across the switch (derivative there is about -2.5e-3)
    CHECK(erfcx(15.0 - 1e-11) == doctest::Approx(erfcx(15.0 + 1e-11)).epsilon(1e-11));
    // large-argument leading behaviour 1/(z sqrt(pi))
    CHECK(erfcx(1e4) * 1e4 * std::sqrt(M_PI) == doctest::Approx(1.0).epsilon(1e-8));
}
