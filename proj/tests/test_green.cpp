#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bsg/green.hpp"

using namespace bsg;

TEST_CASE("spectral parameter domain") {
    CHECK_THROWS_AS(SpectralParameter(0.5), InvalidSpectralParameter);
    CHECK_THROWS_AS(SpectralParameter(2.0), InvalidSpectralParameter);
    CHECK_NOTHROW(SpectralParameter(0.4999));
    CHECK(make_mode(3, SpectralParameter(-1.0)).nu == doctest::Approx(4.5));
}

TEST_CASE("truncation selection: diagonal rejected, deeper for smaller gaps") {
    const SpectralParameter E(0.0);
    CHECK_THROWS_AS(green_truncation(0.0, E, 1e-8), DiagonalSingularity);
    const int n_wide = green_truncation(5.0, E, 1e-10);
    const int n_narrow = green_truncation(0.8, E, 1e-10);
    CHECK(n_narrow > n_wide);
    CHECK_THROWS_AS(green_truncation(1e-4, E, 1e-14), UnsupportedOrder);
    CHECK_THROWS_AS(green_truncation(1.0, E, 0.0), ConfigError);
}

TEST_CASE("well-separated evaluation dominated by the lowest transverse mode") {
    // At (0,0) only even modes contribute; with separation 5 the n >= 2 part
    // is suppressed by at least e^{-(sqrt3-1)*5} relative to the n = 0 term.
    const SpectralParameter E(0.0);
    BasisConfig cfg;
    cfg.tail_tol = 1e-12;
    const double total = green_kernel(0.0, 0.0, 0.0, 5.0, E, cfg);
    const double lead = std::exp(-5.0) / std::sqrt(M_PI);  // e^{-kappa_0 d}/kappa_0 phi_0(0)^2
    CHECK(std::abs(total - lead) / lead < std::exp(-(std::sqrt(3.0) - 1.0) * 5.0));
}

TEST_CASE("auto-truncated value matches a deep fixed truncation") {
    const SpectralParameter E(-1.0);
    BasisConfig cfg;
    cfg.tail_tol = 1e-10;
    const double v = green_kernel(0.3, -0.2, 0.1, 0.9, E, cfg);
    const double deep = green_kernel_truncated(0.3, -0.2, 0.1, 0.9, E, 400);
    CHECK(v == doctest::Approx(deep).epsilon(1e-8));
}

TEST_CASE("kernel symmetries") {
    const SpectralParameter E(-0.7);
    BasisConfig cfg;
    const double a = green_kernel(0.4, -1.1, 0.2, 1.5, E, cfg);
    CHECK(a == doctest::Approx(green_kernel(-1.1, 0.4, 0.2, 1.5, E, cfg)).epsilon(1e-14));
    CHECK(a == doctest::Approx(green_kernel(0.4, -1.1, 1.5, 0.2, E, cfg)).epsilon(1e-14));
    CHECK(a == doctest::Approx(green_kernel(0.4, -1.1, -0.2, -1.5, E, cfg)).epsilon(1e-14));
}

TEST_CASE("on the x-diagonal the kernel increases with E") {
    BasisConfig cfg;
    cfg.tail_tol = 1e-12;
    const double lo = green_kernel(0.3, 0.3, 0.0, 0.8, SpectralParameter(-2.0), cfg);
    const double mid = green_kernel(0.3, 0.3, 0.0, 0.8, SpectralParameter(-0.5), cfg);
    const double hi = green_kernel(0.3, 0.3, 0.0, 0.8, SpectralParameter(0.3), cfg);
    CHECK(lo > 0.0);
    CHECK(lo < mid);
    CHECK(mid < hi);
}
