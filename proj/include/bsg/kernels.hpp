#pragma once

// Birman-Schwinger kernels for the Gaussian, delta-line, and scaled-Gaussian
// impurities: pointwise evaluation, Hilbert-Schmidt traces (series) and the
// closed-form bounds.

#include "bsg/basis.hpp"
#include "bsg/green.hpp"

namespace bsg {

// B~_E for the Gaussian impurity as a mode sum of separable terms
//   sum_n (1/kappa_n) [e^{-x^2/2} phi_n(x)] [e^{-x1^2/2} phi_n(x1)]
//         e^{-kappa_n |y-y1|} e^{-y^2/2} e^{-y1^2/2}.
// Coupling-free: the factor -lambda of B_E is applied by callers.
struct SeparableBSKernel {
    SpectralParameter E;
    BasisConfig cfg;
    bool coupling_free = true;

    double weight(int n) const { return 1.0 / make_mode(n, E).kappa; }
    double y_rate(int n) const { return make_mode(n, E).kappa; }
    double x_factor(int n, double x) const {
        return std::exp(-0.5 * x * x) * hermite_fn(n, x);
    }
};

// Delta-line kernel, acting on functions of y only:
//   sqrt(pi) e^{-y^2/2} [sum_k phi_{2k}(0)^2 e^{-kappa_{2k}|y-y1|}/kappa_{2k}] e^{-y1^2/2}.
struct DeltaBSKernel {
    SpectralParameter E;
    int k_modes = 4000;                       // exact even-mode terms; analytic tail beyond
    static constexpr double prefactor = 1.7724538509055160273;  // sqrt(pi)
};

// Scaled impurity V_n(x,y) = n e^{-(n^2 x^2 + y^2)}; reduces to the Gaussian
// kernel at n_scale = 1.
struct ScaledGaussianBSKernel {
    int n_scale = 1;
    SeparableBSKernel base;
};

// Truncated kernel value; same tail policy as green_kernel (envelope included).
double bs_eval(const SeparableBSKernel& k, double x, double x1, double y, double y1);

// Restricted to modes [0, n_modes) -- for hand-checks against single-mode formulas.
double bs_eval_truncated(const SeparableBSKernel& k, double x, double x1,
                         double y, double y1, int n_modes);

// int int e^{-y^2} e^{-(rate_m+rate_n)|y-y'|} e^{-y'^2} dy dy' by 2D quadrature
// split along the kink y = y'.
double y_pair_integral(double rate_m, double rate_n);

// Equivalent closed form pi * erfcx((rate_m+rate_n)/sqrt(2)); must agree with
// the quadrature version to 1e-10 (asserted in tests).  Used in the trace hot
// loops for speed.
double y_pair_integral_closed(double rate_m, double rate_n);

// tr(B~_E^2) = sum_{m,n} y_pair_integral(kappa_m,kappa_n)/(2 sqrt(nu_m nu_n))
//              * overlap_sq_closed(m,n).
// Shell-exhausted partial sum over m+n = 2s, s < shells (absolutely convergent
// positive series, so any exhaustion order converges to the same value).
double trace_bs_squared_shells(const SpectralParameter& E, long shells);

// Square-cap partial sum over m,n < n_modes (used for matched-truncation
// comparisons against the 4D quadrature oracle).
double trace_bs_squared_modes(const SpectralParameter& E, int n_modes);

// Certified bound on the omitted tail (shells >= S), from the summand bound
// chain (Young-type estimate + the phi_{2n}^4(0) <= 1/(pi^2 n) bound).
double trace_tail_bound(const SpectralParameter& E, long shells);

// Partial sum with shells chosen so the certified tail is below cfg.tail_tol
// (and at least cfg.n_modes/2).  Throws QuadratureUnderresolved when the
// tolerance would require more than an internal shell cap.
double trace_bs_squared(const SpectralParameter& E, const BasisConfig& cfg);

// Closed-form Hilbert-Schmidt bound for the Gaussian kernel:
//   (8 sqrt(pi) g^{1/2})^{-1} [3 sqrt2 + g^{-1/2}]^2 + 9/(4 sqrt(pi) (3/2-E)^{1/2}),
// g = 1/2 - E.
double hs_bound_gaussian(const SpectralParameter& E);

// S1 = sum_{n>=1} n^{-1/2} (2n+1/2-E)^{-3/4} and its closed bound 3 sqrt2 / g^{1/4}.
double s1_bound(const SpectralParameter& E);
double s1_partial_sum(const SpectralParameter& E);   // tail-completed to ~1e-10
// S2 = sum_{n>=0} (n+1/2)^{-1/2} (2n+3/2-E)^{-3/4} and bound 3 sqrt2/(3/2-E)^{1/4}.
double s2_bound(const SpectralParameter& E);
double s2_partial_sum(const SpectralParameter& E);

// Delta kernel value (mode series plus analytic even-mode tail).
double delta_bs_eval(const DeltaBSKernel& k, double y, double y1);

// Closed-form bound (1/(4 sqrt(pi) g^{1/2})) [g^{-1/2} + 3 sqrt2]^2.
double delta_hs_bound(const SpectralParameter& E);

// tr(K_delta^2) partial series over even modes < 2*k_cap.
double delta_trace_series(const SpectralParameter& E, int k_cap);

// Intermediate bound of the chain: (pi^{3/2}/4) [sum_k phi_{2k}(0)^2 / nu_{2k}^{3/4}]^2
// (tail-completed sum).
double delta_trace_mid_bound(const SpectralParameter& E);

// n int e^{-n^2 x^2} phi_l(x) phi_m(x) dx, computed in the substitution form
// int e^{-x^2} phi_l(x/n) phi_m(x/n) dx with a Gauss-Hermite rule.
double scaled_overlap(int l, int m, int n_scale, const QuadratureRule& gh_rule);

// || K_n - K_delta ||_HS from tr(K_n^2) - 2 tr(K_n K_delta) + tr(K_delta^2),
// all three traces combined termwise at a common mode cap (manifestly >= 0).
double hs_distance_scaled_to_delta(int n_scale, const SpectralParameter& E,
                                   const BasisConfig& cfg);

} // namespace bsg
