#include "bsg/basis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace bsg {

void BasisConfig::validate() const {
    if (n_modes < 1) throw ConfigError("BasisConfig: n_modes must be >= 1");
    if (quad_points < 2 * n_modes)
        throw ConfigError("BasisConfig: quad_points must be >= 2*n_modes (Gauss exactness)");
    if (!(tail_tol > 0.0)) throw ConfigError("BasisConfig: tail_tol must be > 0");
}

namespace {

// Golub-Welsch: nodes = eigenvalues of the Jacobi matrix, weights from the
// first eigenvector components scaled by the weight-function integral.
QuadratureRule golub_welsch(const std::vector<double>& diag,
                            const std::vector<double>& offdiag,
                            double weight_integral) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = diag[i];
        if (i > 0) J(i - 1, i) = J(i, i - 1) = offdiag[i - 1];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = eig.eigenvalues()(i);
        const double v0 = eig.eigenvectors()(0, i);
        rule.weights[i] = weight_integral * v0 * v0;
    }
    return rule;
}

} // namespace

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw QuadratureUnderresolved("gauss_hermite: need n >= 1");
    std::vector<double> diag(n, 0.0), off(n - 1);
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
    QuadratureRule r = golub_welsch(diag, off, std::sqrt(M_PI));
    // The eigenvector-based weights bottom out near machine epsilon squared
    // (~1e-35 for n = 100) while the true extreme weights continue down to
    // e^{-x_i^2}. Recompute them from the Christoffel function,
    //   w_i = 1 / sum_{k<n} h_k(x_i)^2 = e^{-x_i^2} / sum_{k<n} phi_k(x_i)^2,
    // which keeps full relative accuracy because the eigenfunctions phi_k
    // are uniformly bounded.
    if (n - 1 <= kMaxHermiteOrder) {
        std::vector<double> ph(n);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double x = r.nodes[i];
            hermite_fn_all(n, x, ph.data());
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += ph[k] * ph[k];
            r.weights[i] = std::exp(-x * x) / s;
        }
    }
    return r;
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw QuadratureUnderresolved("gauss_legendre: need n >= 1");
    std::vector<double> diag(n, 0.0), off(n - 1);
    for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    return golub_welsch(diag, off, 2.0);
}

QuadratureRule gauss_legendre_ab(int n, double a, double b) {
    QuadratureRule base = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < base.size(); ++i) {
        base.nodes[i] = mid + half * base.nodes[i];
        base.weights[i] *= half;
    }
    return base;
}

QuadratureRule composite_legendre(const std::vector<double>& edges, int nodes_per_panel) {
    if (edges.size() < 2) throw QuadratureUnderresolved("composite_legendre: need >= 2 edges");
    QuadratureRule base = gauss_legendre(nodes_per_panel);
    QuadratureRule out;
    out.nodes.reserve((edges.size() - 1) * base.size());
    out.weights.reserve((edges.size() - 1) * base.size());
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        for (std::size_t i = 0; i < base.size(); ++i) {
            out.nodes.push_back(mid + half * base.nodes[i]);
            out.weights.push_back(half * base.weights[i]);
        }
    }
    return out;
}

void hermite_fn_all(int n_max, double x, double* out) {
    if (n_max < 1) return;
    if (n_max - 1 > kMaxHermiteOrder)
        throw UnsupportedOrder("hermite_fn: order " + std::to_string(n_max - 1) +
                               " above validated max " + std::to_string(kMaxHermiteOrder));
    out[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (n_max == 1) return;
    out[1] = std::sqrt(2.0) * x * out[0];
    for (int n = 1; n + 1 < n_max; ++n)
        out[n + 1] = std::sqrt(2.0 / (n + 1)) * x * out[n] -
                     std::sqrt(n / (n + 1.0)) * out[n - 1];
}

void hermite_poly_all(int n_max, double x, double* out) {
    if (n_max < 1) return;
    if (n_max - 1 > kMaxHermiteOrder)
        throw UnsupportedOrder("hermite_poly: order above validated max");
    out[0] = std::pow(M_PI, -0.25);
    if (n_max == 1) return;
    out[1] = std::sqrt(2.0) * x * out[0];
    for (int n = 1; n + 1 < n_max; ++n)
        out[n + 1] = std::sqrt(2.0 / (n + 1)) * x * out[n] -
                     std::sqrt(n / (n + 1.0)) * out[n - 1];
}

double hermite_fn(int n, double x) {
    if (n < 0) throw UnsupportedOrder("hermite_fn: negative order");
    if (n > kMaxHermiteOrder)
        throw UnsupportedOrder("hermite_fn: order " + std::to_string(n) +
                               " above validated max " + std::to_string(kMaxHermiteOrder));
    std::vector<double> buf(n + 1);
    hermite_fn_all(n + 1, x, buf.data());
    return buf[n];
}

double phi2n_zero_sq(int n) {
    if (n < 0) throw UnsupportedOrder("phi2n_zero_sq: negative index");
    return std::exp(-0.5 * std::log(M_PI) + std::lgamma(2.0 * n + 1.0) -
                    2.0 * n * std::log(2.0) - 2.0 * std::lgamma(n + 1.0));
}

double overlap_gaussian(int m, int n, const QuadratureRule& rule) {
    if (static_cast<int>(rule.size()) < m + n + 2)
        throw QuadratureUnderresolved("overlap_gaussian: rule size " +
                                      std::to_string(rule.size()) + " < m+n+2");
    // int phi_m phi_n e^{-x^2} dx = 2^{-1/2} int h_m(u) h_n(u) e^{-z^2} dz,
    // u = z/sqrt2. Evaluate through the decayed form h_m h_n e^{-z^2} =
    // [phi_m(u) e^{u^2/2 - z^2/2}] [phi_n(u) ...] = phi_m(u) phi_n(u) e^{-u^2}:
    // bare polynomials against the tiny (noise-limited) extreme rule weights
    // would lose everything, the bounded eigenfunctions cannot.
    // Near-orthogonal pairs (e.g. (0,30), overlap ~8e-6 against summands ~0.05)
    // are cancellation-dominated; double-precision nodes/weights leave ~1e-15
    // absolute noise, too coarse for a 1e-10 relative target on the square.
    // Newton-polish each node as a root of the orthonormal polynomial h_N in
    // long double (h_N' = sqrt(2N) h_{N-1}) and take Christoffel weights
    // w_i = 1/sum_{k<N} h_k^2 at the refined node.
    const int N = static_cast<int>(rule.size());
    std::vector<long double> h(N + 1);
    const auto eval = [&h](int count, long double x) {
        h[0] = powl(static_cast<long double>(M_PI), -0.25L);
        if (count > 1) h[1] = sqrtl(2.0L) * x * h[0];
        for (int k = 1; k + 1 < count; ++k)
            h[k + 1] = sqrtl(2.0L / (k + 1)) * x * h[k] -
                       sqrtl(static_cast<long double>(k) / (k + 1)) * h[k - 1];
    };
    const int top = std::max(m, n) + 1;
    long double acc = 0.0L;
    const long double inv_sqrt2 = 1.0L / sqrtl(2.0L);
    for (int i = 0; i < N; ++i) {
        long double x = rule.nodes[i];
        for (int it = 0; it < 3; ++it) {
            eval(N + 1, x);
            x -= h[N] / (sqrtl(2.0L * N) * h[N - 1]);
        }
        eval(N, x);
        long double s = 0.0L;
        for (int k = 0; k < N; ++k) s += h[k] * h[k];
        const long double w = 1.0L / s;  // includes the e^{-x^2} factor
        const long double u = x * inv_sqrt2;
        eval(top, u);
        acc += w * h[m] * h[n];
    }
    return static_cast<double>(acc * inv_sqrt2);
}

double overlap_sq_closed(int m, int n) {
    if (m < 0 || n < 0) throw UnsupportedOrder("overlap_sq_closed: negative index");
    if ((m + n) % 2 != 0) return 0.0;
    const double s = 0.5 * (m + n);
    const double lg = 2.0 * (std::lgamma(m + n + 1.0) - std::lgamma(s + 1.0)) -
                      2.0 * (m + n) * std::log(2.0) -
                      std::lgamma(m + 1.0) - std::lgamma(n + 1.0);
    return 0.5 * std::exp(lg);
}

double erfcx(double x) {
    if (x < 15.0) return std::exp(x * x) * std::erfc(x);
    // Asymptotic series: erfcx(x) ~ (1/(x sqrt(pi))) sum_k (-1)^k (2k-1)!!/(2x^2)^k
    const double q = 0.5 / (x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 8; ++k) {
        term *= -(2.0 * k - 1.0) * q;
        sum += term;
    }
    return sum / (x * std::sqrt(M_PI));
}

} // namespace bsg
