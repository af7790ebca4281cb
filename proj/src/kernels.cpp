#include "bsg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bsg {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2 = 1.4142135623730950488;

// E1(x) = -Ei(-x), exponential integral for x > 0.
double expint_e1(double x) { return -std::expint(-x); }

} // namespace

double bs_eval_truncated(const SeparableBSKernel& k, double x, double x1,
                         double y, double y1, int n_modes) {
    const double series = green_kernel_truncated(x, x1, y, y1, k.E, n_modes);
    return std::exp(-0.5 * (y * y + y1 * y1)) * series;
}

double bs_eval(const SeparableBSKernel& k, double x, double x1, double y, double y1) {
    const int n = green_truncation(std::abs(y - y1), k.E, k.cfg.tail_tol);
    return bs_eval_truncated(k, x, x1, y, y1, n);
}

double y_pair_integral_closed(double rate_m, double rate_n) {
    return M_PI * erfcx((rate_m + rate_n) / kSqrt2);
}

double y_pair_integral(double rate_m, double rate_n) {
    if (rate_m < 0.0 || rate_n < 0.0)
        throw ConfigError("y_pair_integral: rates must be nonnegative");
    const double c = rate_m + rate_n;
    // I = 2 int dy e^{-y^2} int_{r>0} dr e^{-(y-r)^2 - c r}   (split at y' = y)
    static const QuadratureRule y_rule = gauss_legendre_ab(96, -7.5, 7.5);
    const double scale = 1.0 / (1.0 + c);
    std::vector<double> edges{0.0};
    double e = 0.25 * scale;
    while (e < 16.0) {
        edges.push_back(e);
        e *= 2.0;
    }
    edges.push_back(16.0);
    const QuadratureRule r_rule = composite_legendre(edges, 20);
    double acc = 0.0;
    for (std::size_t i = 0; i < y_rule.size(); ++i) {
        const double y = y_rule.nodes[i];
        double inner = 0.0;
        for (std::size_t j = 0; j < r_rule.size(); ++j) {
            const double r = r_rule.nodes[j];
            inner += r_rule.weights[j] * std::exp(-(y - r) * (y - r) - c * r);
        }
        acc += y_rule.weights[i] * std::exp(-y * y) * inner;
    }
    return 2.0 * acc;
}

double trace_bs_squared_shells(const SpectralParameter& E, long shells) {
    const double e = E.value();
    double total = 0.0;
    double w_diag = 0.5;  // overlap_sq_closed(s, s) at s = 0
    for (long s = 0; s < shells; ++s) {
        // Beyond d_max the closed-form pair weights obey W(s,d) <= W(s,0) e^{-d^2/(2s)};
        // at d = 6.5 sqrt(s) the relative shell remainder is < 1e-9.
        const long d_max = std::min<long>(
            s, static_cast<long>(std::ceil(6.5 * std::sqrt(static_cast<double>(std::max<long>(s, 1))))));
        double w = w_diag;
        for (long d = 0; d <= d_max; ++d) {
            const double nu_m = s + d + 0.5 - e;
            const double nu_n = s - d + 0.5 - e;
            const double c = std::sqrt(2.0 * nu_m) + std::sqrt(2.0 * nu_n);
            const double ypair = M_PI * erfcx(c / kSqrt2);
            const double term = ypair / (2.0 * std::sqrt(nu_m * nu_n)) * w;
            total += (d == 0) ? term : 2.0 * term;
            w *= static_cast<double>(s - d) / static_cast<double>(s + d + 1);
        }
        const double r = (2.0 * s + 1.0) / (2.0 * s + 2.0);
        w_diag *= r * r;
    }
    return total;
}

double trace_bs_squared_modes(const SpectralParameter& E, int n_modes) {
    const double e = E.value();
    std::vector<double> nu(n_modes), kap(n_modes);
    for (int m = 0; m < n_modes; ++m) {
        nu[m] = m + 0.5 - e;
        kap[m] = std::sqrt(2.0 * nu[m]);
    }
    double total = 0.0;
    for (int m = 0; m < n_modes; ++m)
        for (int n = m; n < n_modes; ++n) {
            if ((m + n) % 2 != 0) continue;
            const double term = y_pair_integral_closed(kap[m], kap[n]) /
                                (2.0 * std::sqrt(nu[m] * nu[n])) * overlap_sq_closed(m, n);
            total += (m == n) ? term : 2.0 * term;
        }
    return total;
}

namespace {

// Summand-bound sum over one shell: sqrt(pi)/4 * W_bound(s,d) / (nu_m nu_n)^{3/4},
// with W(s,d) <= (2 pi s)^{-1} e^{-d^2/(2s)}.
double bound_shell(double e, long s) {
    const double w0 = 1.0 / (2.0 * M_PI * static_cast<double>(s));
    const double nubar = s + 0.5 - e;
    double acc = 0.0;
    for (long d = 0; d <= s; ++d) {
        const double gauss = std::exp(-0.5 * d * d / static_cast<double>(s));
        if (gauss < 1e-14 && d > 3) break;
        const double prod = (nubar - d) * (nubar + d);
        const double term = kSqrtPi / 4.0 * w0 * gauss / std::pow(prod, 0.75);
        acc += (d == 0) ? term : 2.0 * term;
    }
    return acc;
}

} // namespace

double trace_tail_bound(const SpectralParameter& E, long shells) {
    // bound_shell(s) * s^{3/2} is decreasing (checked in tests), so
    //   sum_{s >= S} bound_shell(s) <= bound_shell(S) S^{3/2} sum s^{-3/2}
    //                               <= 2 bound_shell(S) S^{3/2} / sqrt(S-1).
    const long s = std::max<long>(shells, 2);
    return 2.0 * bound_shell(E.value(), s) * std::pow(static_cast<double>(s), 1.5) /
           std::sqrt(static_cast<double>(s - 1));
}

double trace_bs_squared(const SpectralParameter& E, const BasisConfig& cfg) {
    cfg.validate();
    constexpr long kShellCap = 1'000'000;
    long shells = std::max<long>(64, cfg.n_modes / 2);
    while (trace_tail_bound(E, shells) > cfg.tail_tol) {
        shells *= 2;
        if (shells > kShellCap)
            throw QuadratureUnderresolved(
                "trace_bs_squared: tail_tol unreachable within the internal shell cap");
    }
    return trace_bs_squared_shells(E, shells);
}

double hs_bound_gaussian(const SpectralParameter& E) {
    const double g = 0.5 - E.value();
    const double b = 3.0 * kSqrt2 + 1.0 / std::sqrt(g);
    return b * b / (8.0 * kSqrtPi * std::sqrt(g)) +
           9.0 / (4.0 * kSqrtPi * std::sqrt(1.5 - E.value()));
}

double s1_bound(const SpectralParameter& E) {
    return 3.0 * kSqrt2 / std::pow(0.5 - E.value(), 0.25);
}

double s2_bound(const SpectralParameter& E) {
    return 3.0 * kSqrt2 / std::pow(1.5 - E.value(), 0.25);
}

namespace {

// Tail sum_{n > K} f(n) ~ int_{K+1/2}^inf f(x) dx, mapped by u = x^{-1/4}
// onto a smooth finite integral (Gauss-Legendre exactness to ~1e-14).
double s_tail(double c, double shift, long K) {
    // integrand f(x) = (x+shift)^{-1/2} (2x+c)^{-3/4}
    const double U = std::pow(K + 0.5, -0.25);
    const QuadratureRule q = gauss_legendre_ab(48, 0.0, U);
    double acc = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double u = q.nodes[i], u4 = u * u * u * u;
        acc += q.weights[i] * 4.0 /
               (std::sqrt(1.0 + shift * u4) * std::pow(2.0 + c * u4, 0.75));
    }
    return acc;
}

} // namespace

double s1_partial_sum(const SpectralParameter& E) {
    const double c = 0.5 - E.value();
    const long K = 200'000;
    double acc = 0.0;
    for (long n = 1; n <= K; ++n)
        acc += 1.0 / (std::sqrt(static_cast<double>(n)) * std::pow(2.0 * n + c, 0.75));
    return acc + s_tail(c, 0.0, K);
}

double s2_partial_sum(const SpectralParameter& E) {
    const double c = 1.5 - E.value();
    const long K = 200'000;
    double acc = 0.0;
    for (long n = 0; n <= K; ++n)
        acc += 1.0 / (std::sqrt(n + 0.5) * std::pow(2.0 * n + c, 0.75));
    return acc + s_tail(c, 0.5, K);
}

double delta_bs_eval(const DeltaBSKernel& k, double y, double y1) {
    const double d = std::abs(y - y1);
    if (d == 0.0)
        throw DiagonalSingularity("delta_bs_eval: |y - y1| = 0, kernel diverges");
    const double e = k.E.value();
    const double c = 1.0 - 2.0 * e;
    double series = 0.0;
    double b = 1.0;  // binom(2k,k)/4^k, so phi_{2k}(0)^2 = b / sqrt(pi)
    for (int kk = 0; kk < k.k_modes; ++kk) {
        const double kap = std::sqrt(4.0 * kk + c);
        series += b / kSqrtPi * std::exp(-kap * d) / kap;
        b *= (2.0 * kk + 1.0) / (2.0 * kk + 2.0);
    }
    // Analytic remainder: sum_{k>K} ~ (1/pi) int_{kappa_K}^inf e^{-t d}/t dt = E1/pi.
    const double kap_cap = std::sqrt(4.0 * k.k_modes + c);
    series += expint_e1(kap_cap * d) / M_PI;
    return DeltaBSKernel::prefactor * std::exp(-0.5 * (y * y + y1 * y1)) * series;
}

double delta_hs_bound(const SpectralParameter& E) {
    const double g = 0.5 - E.value();
    const double b = 1.0 / std::sqrt(g) + 3.0 * kSqrt2;
    return b * b / (4.0 * kSqrtPi * std::sqrt(g));
}

double delta_trace_series(const SpectralParameter& E, int k_cap) {
    const double e = E.value();
    std::vector<double> p2(k_cap), nu(k_cap), kap(k_cap);
    double b = 1.0;
    for (int k = 0; k < k_cap; ++k) {
        p2[k] = b / kSqrtPi;
        nu[k] = 2.0 * k + 0.5 - e;
        kap[k] = std::sqrt(2.0 * nu[k]);
        b *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
    }
    double total = 0.0;
    for (int j = 0; j < k_cap; ++j)
        for (int k = j; k < k_cap; ++k) {
            const double term = M_PI * p2[j] * p2[k] *
                                y_pair_integral_closed(kap[j], kap[k]) /
                                (2.0 * std::sqrt(nu[j] * nu[k]));
            total += (j == k) ? term : 2.0 * term;
        }
    return total;
}

double delta_trace_mid_bound(const SpectralParameter& E) {
    const double e = E.value();
    const long K = 200'000;
    double acc = 0.0;
    double b = 1.0;
    for (long k = 0; k < K; ++k) {
        acc += b / kSqrtPi / std::pow(2.0 * k + 0.5 - e, 0.75);
        b *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
    }
    // tail: phi_{2k}(0)^2 -> 1/(pi sqrt k); same u = k^{-1/4} map as the S-series
    acc += s_tail(0.5 - e, 0.0, K) / M_PI;
    const double s = acc;
    return std::pow(M_PI, 1.5) / 4.0 * s * s;
}

double scaled_overlap(int l, int m, int n_scale, const QuadratureRule& rule) {
    if (n_scale < 1) throw ConfigError("scaled_overlap: n_scale must be >= 1");
    if (static_cast<int>(rule.size()) < l + m + 20)
        throw QuadratureUnderresolved("scaled_overlap: rule too small for orders " +
                                      std::to_string(l) + "," + std::to_string(m));
    const int top = std::max(l, m) + 1;
    std::vector<double> phi(top);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        hermite_fn_all(top, rule.nodes[i] / n_scale, phi.data());
        acc += rule.weights[i] * phi[l] * phi[m];
    }
    return acc;
}

double hs_distance_scaled_to_delta(int n_scale, const SpectralParameter& E,
                                   const BasisConfig& cfg) {
    if (!(E.value() < 0.0))
        throw InvalidSpectralParameter("hs_distance_scaled_to_delta: requires E < 0");
    if (n_scale < 1) throw ConfigError("hs_distance_scaled_to_delta: n_scale must be >= 1");
    const int M = cfg.n_modes;
    const double e = E.value();
    // scaled overlaps so_{lm} on a Gauss-Legendre x-rule (substitution form)
    const QuadratureRule xq = gauss_legendre_ab(600, -9.0, 9.0);
    std::vector<std::vector<double>> so(M, std::vector<double>(M, 0.0));
    {
        std::vector<double> phi(M);
        for (std::size_t i = 0; i < xq.size(); ++i) {
            const double x = xq.nodes[i];
            hermite_fn_all(M, x / n_scale, phi.data());
            const double w = xq.weights[i] * std::exp(-x * x);
            for (int l = 0; l < M; ++l) {
                const double wl = w * phi[l];
                for (int m = l; m < M; ++m) so[l][m] += wl * phi[m];
            }
        }
        for (int l = 0; l < M; ++l)
            for (int m = 0; m < l; ++m) so[l][m] = so[m][l];
    }
    std::vector<double> phi0(M);
    hermite_fn_all(M, 0.0, phi0.data());
    std::vector<double> nu(M), kap(M);
    for (int m = 0; m < M; ++m) {
        nu[m] = m + 0.5 - e;
        kap[m] = std::sqrt(2.0 * nu[m]);
    }
    // ||K_n - K_delta||^2 = sum_{l,m} Y_lm (so_lm - sqrt(pi) phi_l(0) phi_m(0))^2,
    // i.e. tr(K_n^2) - 2 tr(K_n K_delta) + tr(K_delta^2) combined termwise.
    double dist2 = 0.0;
    for (int l = 0; l < M; ++l)
        for (int m = l; m < M; ++m) {
            const double diff = so[l][m] - kSqrtPi * phi0[l] * phi0[m];
            if (diff == 0.0) continue;
            const double y = y_pair_integral_closed(kap[l], kap[m]) /
                             (2.0 * std::sqrt(nu[l] * nu[m]));
            const double term = y * diff * diff;
            dist2 += (l == m) ? term : 2.0 * term;
        }
    return std::sqrt(dist2);
}

} // namespace bsg
