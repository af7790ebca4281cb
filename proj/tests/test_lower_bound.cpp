#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bsg/lower_bound.hpp"
#include "bsg/report.hpp"

using namespace bsg;

TEST_CASE("left-hand sides: spot values, monotonicity, domain") {
    CHECK(lhs_gaussian(0.0) == doctest::Approx(29.975886226319055).epsilon(1e-13));
    CHECK(lhs_delta(0.0) == doctest::Approx(32.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(lhs_gaussian(0.5), InvalidSpectralParameter);
    CHECK_THROWS_AS(lhs_delta(0.7), InvalidSpectralParameter);
    double prev_g = 0.0, prev_d = 0.0;
    for (double e : {-10000.0, -100.0, -10.0, -1.0, 0.0, 0.4, 0.4999}) {
        const double a = lhs_gaussian(e), b = lhs_delta(e);
        CHECK(a > prev_g);
        CHECK(b > prev_d);
        prev_g = a;
        prev_d = b;
    }
    CHECK(lhs_gaussian(-1e8) < 2e-3);  // vanishes toward -infinity
}

TEST_CASE("algebraic relation between the two left-hand sides") {
    // The delta-case LHS is exactly twice the first (gaussian-trace) term.
    for (double e : {-50.0, -2.0, 0.0, 0.45}) {
        const double g = 0.5 - e;
        const double first = (1.0 / (2.0 * std::sqrt(g))) *
                             std::pow(3.0 * std::sqrt(2.0) + 1.0 / std::sqrt(g), 2);
        CHECK(lhs_delta(e) == doctest::Approx(2.0 * first).epsilon(1e-13));
        CHECK(lhs_gaussian(e) == doctest::Approx(first + 9.0 / std::sqrt(1.5 - e)).epsilon(1e-13));
    }
}

TEST_CASE("root solves: frozen values and residuals") {
    const LowerBoundResult a = solve_gaussian_bound(0.5);
    CHECK(a.energy == doctest::Approx(-0.048216).epsilon(1e-4));
    CHECK(solve_gaussian_bound(1.0).energy == doctest::Approx(-6.743890).epsilon(1e-5));
    CHECK(solve_gaussian_bound(2.0).energy == doctest::Approx(-106.943531).epsilon(1e-6));
    CHECK(solve_delta_bound(0.5).energy == doctest::Approx(-0.455803).epsilon(1e-5));
    CHECK(solve_delta_bound(1.0).energy == doctest::Approx(-8.257911).epsilon(1e-5));
    CHECK(solve_delta_bound(2.0).energy == doctest::Approx(-112.105279).epsilon(1e-6));
    CHECK(a.residual < 1e-10);
    CHECK(a.bracket.first <= a.energy);
    CHECK(a.energy <= a.bracket.second);
    // the couplings whose bound passes exactly through E = 0
    CHECK(std::abs(solve_gaussian_bound(0.48634).energy) < 1e-3);
    CHECK(std::abs(solve_delta_bound(0.39582).energy) < 1e-3);
    CHECK_THROWS_AS(solve_gaussian_bound(0.0), ConfigError);
}

TEST_CASE("solutions decrease in the coupling and stay below 1/2") {
    double prev = 0.5;
    for (double lam : logspace(0.01, 100.0, 40)) {
        const double e = solve_gaussian_bound(lam).energy;
        CHECK(e < 0.5);
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("variational lower-bound expression") {
    CHECK_THROWS_AS(klmn_bound_expr(0.1, 1.0), InvalidSpectralParameter);
    CHECK(klmn_bound_expr(-1.0, 1.0) < 0.0);
    CHECK(klmn_bound_expr(-1.0, 2.0) ==
          doctest::Approx(2.0 * klmn_bound_expr(-1.0, 1.0)).epsilon(1e-14));
    // the expression is a valid bound only where the relative form-bound
    // coefficient stays <= 1, i.e. for E <= e_star; its supremum over that
    // region is attained exactly at the equation's root
    const double lam = 1.0;
    const double e_star = solve_gaussian_bound(lam).energy;
    CHECK(klmn_bound_expr(e_star, lam) == doctest::Approx(e_star).epsilon(1e-8));
    for (double de : {-0.5, -0.05})
        CHECK(klmn_bound_expr(e_star + de, lam) < klmn_bound_expr(e_star, lam));
}

TEST_CASE("closed-form asymptotics evaluate verbatim") {
    CHECK(asymptotic_large(10.0) ==
          doctest::Approx(-810000.0 / (4.0 * M_PI * M_PI)).epsilon(1e-14));
    CHECK(asymptotic_small(0.01) ==
          doctest::Approx(0.5 - std::pow(0.01, 4.0 / 3.0) /
                                    (4.0 * std::pow(M_PI, 2.0 / 3.0))).epsilon(1e-14));
    CHECK(asymptotic_small(1e-6) < 0.5);
}

TEST_CASE("log-log fitting recovers synthetic power laws") {
    std::vector<double> xs = logspace(0.1, 10.0, 50), ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = 3.0 * std::pow(xs[i], 2.5);
    const PowerFit f = loglog_fit(xs.data(), ys.data(), static_cast<int>(xs.size()));
    CHECK(f.exponent == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(f.prefactor == doctest::Approx(3.0).epsilon(1e-12));
    ys[0] = -1.0;
    CHECK_THROWS_AS(loglog_fit(xs.data(), ys.data(), static_cast<int>(xs.size())),
                    ConfigError);
    CHECK_THROWS_AS(loglog_fit(xs.data(), ys.data(), 1), ConfigError);
}

TEST_CASE("table serialization is deterministic and exact") {
    const std::vector<double> lams = logspace(0.5, 2.0, 5);
    const Table t = run_lower_bound(lams, LowerBoundSelect::gaussian);
    CHECK(to_csv(t) == to_csv(run_lower_bound(lams, LowerBoundSelect::gaussian)));
    CHECK(to_csv(t).substr(0, 6) == "lambda");
    const std::string j = to_json(t, "deadbeef");
    CHECK(j.find("\"config_hash\": \"deadbeef\"") != std::string::npos);
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK_THROWS_AS(run_lower_bound({}, LowerBoundSelect::both), ConfigError);
    CHECK_THROWS_AS(run_hs_norm({}, BasisConfig{}), ConfigError);
}
