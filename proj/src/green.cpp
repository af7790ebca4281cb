#include "bsg/green.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bsg {

int green_truncation(double d, const SpectralParameter& E, double tol) {
    if (!(tol > 0.0)) throw ConfigError("green_truncation: tol must be > 0");
    if (d == 0.0)
        throw DiagonalSingularity(
            "green_kernel: |y - y1| = 0; the kernel diverges logarithmically on "
            "the y-diagonal and no tolerance can be certified");
    // Remainder over n >= N: pi^{-1/2} sum e^{-kappa_n d}/kappa_n
    //   <= pi^{-1/2} int_{N-1}^inf e^{-kappa(n) d}/kappa(n) dn
    //    = pi^{-1/2} e^{-kappa_{N-1} d} / d       (kappa dkappa = dn)
    const double target = std::log(1.0 / (std::sqrt(M_PI) * tol * d)) / d;
    double n_req = 1.0;
    if (target > 0.0) {
        const double kappa_needed = target;
        n_req = std::ceil(0.5 * kappa_needed * kappa_needed - 0.5 + E.value()) + 2.0;
        n_req = std::max(n_req, 1.0);
    }
    // compare before narrowing: the requirement can exceed the int range
    if (n_req - 1.0 > static_cast<double>(kMaxHermiteOrder))
        throw UnsupportedOrder(
            "green_kernel: required truncation " +
            std::to_string(static_cast<long long>(std::min(n_req, 1e18))) +
            " exceeds validated oscillator order " + std::to_string(kMaxHermiteOrder) +
            " (separation too small)");
    return static_cast<int>(n_req);
}

double green_kernel_truncated(double x, double x1, double y, double y1,
                              const SpectralParameter& E, int n_modes) {
    const double d = std::abs(y - y1);
    std::vector<double> px(n_modes), px1(n_modes);
    hermite_fn_all(n_modes, x, px.data());
    hermite_fn_all(n_modes, x1, px1.data());
    double acc = 0.0;
    for (int n = 0; n < n_modes; ++n) {
        const ModeData md = make_mode(n, E);
        acc += std::exp(-md.kappa * d) / md.kappa * px[n] * px1[n];
    }
    return acc;
}

double green_kernel(double x, double x1, double y, double y1,
                    const SpectralParameter& E, const BasisConfig& cfg) {
    const int n = green_truncation(std::abs(y - y1), E, cfg.tail_tol);
    return green_kernel_truncated(x, x1, y, y1, E, n);
}

} // namespace bsg
