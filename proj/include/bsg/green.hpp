#pragma once

// Resolvent kernel of H0 = (-d^2/dx^2 + x^2)/2 - (d^2/dy^2)/2 with
// controlled truncation error.

#include <cmath>
#include <string>

#include "bsg/basis.hpp"
#include "bsg/errors.hpp"

namespace bsg {

// Energy below inf spec(H0) = 1/2; construction rejects E >= 1/2.
class SpectralParameter {
public:
    explicit SpectralParameter(double e) : e_(e) {
        if (!(e < 0.5))
            throw InvalidSpectralParameter("SpectralParameter: E must be < 1/2, got " +
                                           std::to_string(e));
    }
    double value() const { return e_; }

private:
    double e_;
};

struct ModeData {
    double nu;     // n + 1/2 - E > 0
    double kappa;  // sqrt(2 nu)
};

inline ModeData make_mode(int n, const SpectralParameter& E) {
    const double nu = n + 0.5 - E.value();
    return ModeData{nu, std::sqrt(2.0 * nu)};
}

// Smallest truncation N whose certified remainder (uniform |phi_n| <= pi^{-1/4}
// plus integral comparison in kappa) is below tol for separation d = |y - y1|.
// Throws DiagonalSingularity for d == 0 and UnsupportedOrder when the required
// truncation exceeds kMaxHermiteOrder.
int green_truncation(double d, const SpectralParameter& E, double tol);

// Sum_{n<N} e^{-kappa_n |y-y1|}/kappa_n phi_n(x) phi_n(x1), N auto-selected
// from cfg.tail_tol.
double green_kernel(double x, double x1, double y, double y1,
                    const SpectralParameter& E, const BasisConfig& cfg);

// Same series at an explicit truncation (oracle/refinement studies).
double green_kernel_truncated(double x, double x1, double y, double y1,
                              const SpectralParameter& E, int n_modes);

} // namespace bsg
