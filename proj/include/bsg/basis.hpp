#pragma once

// Harmonic-oscillator eigenfunctions, Gauss rules, and closed-form
// Gaussian-weighted overlaps.  Everything here is pure and thread-safe.

#include <vector>

#include "bsg/errors.hpp"

namespace bsg {

// Highest oscillator order the three-term recurrence is validated for
// (uniform-bound property checked in the tests up to this order).
inline constexpr int kMaxHermiteOrder = 1000;

// Truncation orders and quadrature resolution governing series/integrals.
struct BasisConfig {
    int n_modes = 128;       // truncation N of oscillator sums
    int quad_points = 256;   // Gauss rule size M
    double tail_tol = 1e-8;  // series remainder tolerance

    void validate() const;   // throws ConfigError on violated invariants
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

// Gauss-Hermite rule (weight e^{-x^2} on R), Golub-Welsch via the symmetric
// tridiagonal Jacobi matrix; weights are positive by construction.
QuadratureRule gauss_hermite(int n);

// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

// Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre_ab(int n, double a, double b);

// Composite Gauss-Legendre rule over consecutive panels [edges[i], edges[i+1]].
QuadratureRule composite_legendre(const std::vector<double>& edges, int nodes_per_panel);

// phi_n(x): normalised oscillator eigenfunction, phi_0 = pi^{-1/4} e^{-x^2/2},
// positive leading Hermite coefficient.  Stable to n = kMaxHermiteOrder.
double hermite_fn(int n, double x);

// All of phi_0..phi_{n_max-1} at x in one recurrence sweep.
void hermite_fn_all(int n_max, double x, double* out);

// h_n(x) = phi_n(x) e^{x^2/2}: normalised Hermite polynomial (no envelope).
void hermite_poly_all(int n_max, double x, double* out);

// phi_{2n}(0)^2 = pi^{-1/2} (2n)! / (2^{2n} (n!)^2), evaluated in log space.
double phi2n_zero_sq(int n);

// <phi_m, e^{-x^2} phi_n> by Gauss-Hermite quadrature (exact for the rule,
// since the integrand reduces to a polynomial under x -> z/sqrt(2)).
double overlap_gaussian(int m, int n, const QuadratureRule& gh_rule);

// pi * <phi_m phi_0, phi_0 phi_n>^2 = <phi_m, e^{-x^2} phi_n>^2 in closed
// form; exactly 0 when m + n is odd.
double overlap_sq_closed(int m, int n);

// Scaled exp(x^2) * erfc(x) for x >= 0, accurate to ~1e-13 relative.
double erfcx(double x);

} // namespace bsg
