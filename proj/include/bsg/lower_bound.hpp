#pragma once

// Transcendental lower-bound equations for the ground-state energy, the KLMN
// lower-bound expression, and the closed-form asymptotic approximations.

#include <utility>

#include "bsg/errors.hpp"

namespace bsg {

struct LowerBoundResult {
    double lambda;
    double energy;                       // E(lambda) < 1/2
    double residual;                     // |LHS - RHS| / max(1, |RHS|)
    std::pair<double, double> bracket;   // final enclosing interval in E
};

// LHS of the gaussian-impurity bound equation:
//   (1/(2 sqrt(1/2-E))) [3 sqrt2 + 1/sqrt(1/2-E)]^2 + 9/sqrt(3/2-E).
// Strictly increasing on E < 1/2, range (0, inf).
double lhs_gaussian(double E);

// LHS of the delta-impurity bound equation:
//   (1/sqrt(1/2-E)) [1/sqrt(1/2-E) + 3 sqrt2]^2.
double lhs_delta(double E);

// Unique E with lhs(E) = 4 sqrt(pi)/lambda^2, solved in g = 1/2 - E by
// log-bisection plus Newton polish.  The stored residual is relative to the
// RHS (at very small lambda the RHS exceeds 1e10, so an absolute 1e-10 target
// would be below double-precision resolution of the LHS itself).
LowerBoundResult solve_gaussian_bound(double lambda);
LowerBoundResult solve_delta_bound(double lambda);

// KLMN lower-bound expression (lambda/(2 pi^{1/4})) sqrt(lhs_gaussian(E)) * E,
// valid as a lower bound while the relative-bound coefficient stays <= 1;
// its supremum over E < 0 is attained exactly at solve_gaussian_bound's root.
double klmn_bound_expr(double E, double lambda);

// Closed-form asymptotic approximations, verbatim:
//   large lambda: -81 lambda^4 / (4 pi^2)
//   small lambda: 1/2 - lambda^{4/3} / (4 pi^{2/3})
// The true constants measured from solve_gaussian_bound differ (see loglog_fit users);
// both are reported, neither asserted.
double asymptotic_large(double lambda);
double asymptotic_small(double lambda);

// Least-squares fit of y = C x^p through (log x, log y); requires x, y > 0.
struct PowerFit {
    double exponent;
    double prefactor;
};
PowerFit loglog_fit(const double* xs, const double* ys, int n);

} // namespace bsg
