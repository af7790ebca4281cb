#include "bsg/lower_bound.hpp"

#include <cmath>
#include <string>

namespace bsg {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

void check_e(double E, const char* who) {
    if (!(E < 0.5))
        throw InvalidSpectralParameter(std::string(who) + ": requires E < 1/2");
}

// lhs_gaussian in g = 1/2 - E:  9 g^{-1/2} + 3 sqrt2 g^{-1} + (1/2) g^{-3/2} + 9 (1+g)^{-1/2}
double lhs18_g(double g) {
    return 9.0 / std::sqrt(g) + 3.0 * kSqrt2 / g + 0.5 * std::pow(g, -1.5) +
           9.0 / std::sqrt(1.0 + g);
}

double lhs18_dg(double g) {
    return -4.5 * std::pow(g, -1.5) - 3.0 * kSqrt2 / (g * g) -
           0.75 * std::pow(g, -2.5) - 4.5 * std::pow(1.0 + g, -1.5);
}

// lhs_delta in g:  18 g^{-1/2} + 6 sqrt2 g^{-1} + g^{-3/2}
double lhs20_g(double g) {
    return 18.0 / std::sqrt(g) + 6.0 * kSqrt2 / g + std::pow(g, -1.5);
}

double lhs20_dg(double g) {
    return -9.0 * std::pow(g, -1.5) - 6.0 * kSqrt2 / (g * g) - 1.5 * std::pow(g, -2.5);
}

LowerBoundResult solve_in_g(double lambda, double (*f)(double), double (*df)(double)) {
    if (!(lambda > 0.0)) throw ConfigError("solve_eq: lambda must be > 0");
    const double rhs = 4.0 * std::sqrt(M_PI) / (lambda * lambda);
    // f is decreasing in g with range (0, inf): bracket in log g.
    double glo = 1e-12, ghi = 1.0;
    while (f(ghi) > rhs) ghi *= 4.0;
    while (f(glo) < rhs) glo *= 0.0625;
    for (int it = 0; it < 80; ++it) {
        const double gm = std::sqrt(glo * ghi);
        if (f(gm) > rhs) glo = gm; else ghi = gm;
    }
    double g = std::sqrt(glo * ghi);
    for (int it = 0; it < 8; ++it) {
        const double step = (f(g) - rhs) / df(g);
        const double gn = g - step;
        if (!(gn > 0.0) || std::abs(step) < 1e-17 * g) break;
        g = gn;
    }
    LowerBoundResult r;
    r.lambda = lambda;
    r.energy = 0.5 - g;
    r.residual = std::abs(f(g) - rhs) / std::max(1.0, std::abs(rhs));
    r.bracket = {0.5 - ghi, 0.5 - glo};
    return r;
}

} // namespace

double lhs_gaussian(double E) {
    check_e(E, "lhs_gaussian");
    return lhs18_g(0.5 - E);
}

double lhs_delta(double E) {
    check_e(E, "lhs_delta");
    return lhs20_g(0.5 - E);
}

LowerBoundResult solve_gaussian_bound(double lambda) { return solve_in_g(lambda, lhs18_g, lhs18_dg); }

LowerBoundResult solve_delta_bound(double lambda) { return solve_in_g(lambda, lhs20_g, lhs20_dg); }

double klmn_bound_expr(double E, double lambda) {
    if (!(E < 0.0))
        throw InvalidSpectralParameter("klmn_bound_expr: requires E < 0");
    if (!(lambda > 0.0)) throw ConfigError("klmn_bound_expr: lambda must be > 0");
    return lambda / (2.0 * std::pow(M_PI, 0.25)) * std::sqrt(lhs_gaussian(E)) * E;
}

double asymptotic_large(double lambda) {
    return -81.0 * std::pow(lambda, 4.0) / (4.0 * M_PI * M_PI);
}

double asymptotic_small(double lambda) {
    return 0.5 - std::pow(lambda, 4.0 / 3.0) / (4.0 * std::pow(M_PI, 2.0 / 3.0));
}

PowerFit loglog_fit(const double* xs, const double* ys, int n) {
    if (n < 2) throw ConfigError("loglog_fit: need at least 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw ConfigError("loglog_fit: requires positive data");
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    const double det = n * sxx - sx * sx;
    PowerFit fit;
    fit.exponent = (n * sxy - sx * sy) / det;
    fit.prefactor = std::exp((sy - fit.exponent * sx) / n);
    return fit;
}

} // namespace bsg
