#include "bsg/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bsg/report.hpp"

namespace bsg {

namespace {

std::string sci(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << std::scientific << v;
    return os.str();
}

// Brute-force 4D quadrature of the squared 2D kernel at oscillator cap n_cap,
// in rotated y-coordinates u = y - y', v = y + y' (the v-integral separates
// but is carried numerically to stay independent of the series machinery).
double trace_4d_quadrature(double e, int n_cap) {
    const QuadratureRule xq = gauss_legendre_ab(400, -8.0, 8.0);
    const int nx = static_cast<int>(xq.size());
    Eigen::MatrixXd P(n_cap, nx);
    Eigen::VectorXd wxe(nx);
    {
        std::vector<double> ph(n_cap);
        for (int i = 0; i < nx; ++i) {
            hermite_fn_all(n_cap, xq.nodes[i], ph.data());
            for (int n = 0; n < n_cap; ++n) P(n, i) = ph[n];
            wxe(i) = xq.weights[i] * std::exp(-xq.nodes[i] * xq.nodes[i]);
        }
    }
    std::vector<double> edges;
    for (double t = 0.0; t < 0.5 - 1e-12; t += 0.02) edges.push_back(t);
    for (double t = 0.5; t < 2.0 - 1e-12; t += 0.1) edges.push_back(t);
    for (double t = 2.0; t <= 16.0 + 1e-12; t += 0.5) edges.push_back(t);
    const QuadratureRule uq = composite_legendre(edges, 12);
    const QuadratureRule vq = gauss_legendre_ab(80, -10.0, 10.0);
    double vint = 0.0;
    for (std::size_t i = 0; i < vq.size(); ++i)
        vint += vq.weights[i] * std::exp(-0.5 * vq.nodes[i] * vq.nodes[i]);

    Eigen::VectorXd c(n_cap);
    double uint_acc = 0.0;
    for (std::size_t iu = 0; iu < uq.size(); ++iu) {
        const double u = uq.nodes[iu];
        for (int n = 0; n < n_cap; ++n) {
            const double kap = std::sqrt(2.0 * (n + 0.5 - e));
            c(n) = std::exp(-kap * u) / kap;
        }
        const Eigen::MatrixXd G = P.transpose() * c.asDiagonal() * P;
        const double s = wxe.dot(G.cwiseProduct(G) * wxe);
        uint_acc += uq.weights[iu] * std::exp(-0.5 * u * u) * s;
    }
    return vint * uint_acc;
}

using Clock = std::chrono::steady_clock;

CriterionResult c1() {
    const QuadratureRule rule = gauss_hermite(80);
    double worst = 0.0;
    for (int m = 0; m <= 30; ++m)
        for (int n = 0; n <= 30; ++n) {
            const double o = overlap_gaussian(m, n, rule);
            const double w = overlap_sq_closed(m, n);
            if ((m + n) % 2 != 0) {
                worst = std::max(worst, std::abs(o * o));  // both must vanish
                continue;
            }
            worst = std::max(worst, std::abs(o * o - w) / w);
        }
    return {1, "closed-form overlap vs quadrature, m,n <= 30",
            worst <= 1e-10, "max rel dev " + sci(worst) + " (tol 1e-10)", 0};
}

CriterionResult c2() {
    double worst = -1e300;
    for (int k = 1; k <= 2001; ++k) {
        const double lhs = std::pow(phi2n_zero_sq(k), 2);
        worst = std::max(worst, lhs - 1.0 / (M_PI * M_PI * k));
    }
    return {2, "phi_{2n}^4(0) <= 1/(pi^2 n) through n = 2001",
            worst <= 0.0, "max (lhs - bound) " + sci(worst), 0};
}

CriterionResult c3() {
    BasisConfig cfg;
    cfg.tail_tol = 1e-5;
    double min_slack = 1e300;
    std::string detail;
    bool ok = true;
    for (double e : {-100.0, -10.0, -1.0, 0.0, 0.45}) {
        const SpectralParameter E(e);
        const double tr = trace_bs_squared(E, cfg);
        const double bd = hs_bound_gaussian(E);
        min_slack = std::min(min_slack, bd - tr);
        if (!(tr < bd)) ok = false;
    }
    const SpectralParameter Em1(-1.0);
    const double t1 = trace_bs_squared_shells(Em1, 100000);
    const double t2 = trace_bs_squared_shells(Em1, 200000);
    const double diff = std::abs(t2 - t1);
    ok = ok && diff <= 1e-6;
    detail = "min slack " + sci(min_slack) + ", doubling diff " + sci(diff) +
             " (tol 1e-6)";
    return {3, "HS trace below closed-form bound; series stable", ok, detail, 0};
}

CriterionResult c4() {
    const int cap = 300;
    const SpectralParameter E(-1.0);
    const double series = trace_bs_squared_modes(E, cap);
    const double quad = trace_4d_quadrature(-1.0, cap);
    const double diff = std::abs(series - quad);
    return {4, "mode-series trace vs 4D quadrature at matched cap 300",
            diff <= 1e-6,
            "series " + sci(series) + ", quadrature " + sci(quad) + ", |diff| " +
                sci(diff) + " (tol 1e-6)", 0};
}

CriterionResult c5() {
    bool ok = true;
    double min_slack = 1e300;
    for (double e : {-10.0, -1.0, 0.0}) {
        const SpectralParameter E(e);
        const double frob2 = assemble_delta_matrix(E, 60).squaredNorm();
        const double series = delta_trace_series(E, 4000);
        const double mid = delta_trace_mid_bound(E);
        const double hs = delta_hs_bound(E);
        min_slack = std::min({min_slack, hs - frob2, mid - series, hs - mid});
        if (!(frob2 < hs && series < mid && mid < hs)) ok = false;
    }
    return {5, "delta-kernel discretized trace within closed-form bound chain", ok,
            "min slack across chain " + sci(min_slack), 0};
}

CriterionResult c6() {
    const std::vector<double> lams = logspace(0.01, 20.0, 200);
    double worst_res = 0.0;
    bool ok = true;
    double prev = 1e300;
    for (double lam : lams) {
        const LowerBoundResult a = solve_gaussian_bound(lam);
        const LowerBoundResult b = solve_delta_bound(lam);
        worst_res = std::max({worst_res, a.residual, b.residual});
        if (!(a.energy < 0.5) || !(b.energy < 0.5) || !(a.energy < prev)) ok = false;
        prev = a.energy;
    }
    ok = ok && worst_res < 1e-10;
    return {6, "lower-bound equation residuals and monotonicity over 200 lambdas",
            ok, "max residual " + sci(worst_res) + " (tol 1e-10)", 0};
}

CriterionResult c7() {
    bool ok = true;
    double min_margin = 1e300;
    for (double lam : {0.5, 1.0, 2.0}) {
        const double lower = solve_gaussian_bound(lam).energy;
        const double ground = oracle_ground_state(lam, KindSpec::gaussian()).ground_energy;
        min_margin = std::min(min_margin, ground - lower);
        if (!(lower < ground)) ok = false;
    }
    return {7, "variational lower bound sits below the true ground energy", ok,
            "min margin " + sci(min_margin) + " at lambda in {0.5,1,2}", 0};
}

CriterionResult c8() {
    BasisConfig cfg;
    std::ostringstream d;
    bool ok = true;
    for (const KindSpec kind : {KindSpec::gaussian(), KindSpec::delta()}) {
        const BoundStateResult b = bound_states(1.0, cfg, kind, 1).front();
        const OracleResult o = oracle_ground_state(1.0, kind);
        const double diff = std::abs(b.energy - o.ground_energy);
        const double eps = 1e-6;
        const DiscretizedOperator lo =
            assemble_bs_matrix(SpectralParameter(b.energy - eps), cfg, kind);
        const DiscretizedOperator hi =
            assemble_bs_matrix(SpectralParameter(b.energy + eps), cfg, kind);
        const double dlo = fredholm_det2(1.0, SpectralParameter(b.energy - eps), lo);
        const double dhi = fredholm_det2(1.0, SpectralParameter(b.energy + eps), hi);
        const bool sign_flip = dlo * dhi < 0.0;
        if (diff > 1e-3 || !sign_flip) ok = false;
        d << kind.label() << ": E_b " << sci(b.energy) << " vs oracle "
          << sci(o.ground_energy) << " |diff| " << sci(diff)
          << (sign_flip ? " det2 flips; " : " det2 NO flip; ");
    }
    return {8, "bound-state energies vs direct diagonalization at lambda = 1", ok,
            d.str() + "(tol 1e-3, det2 sign within 1e-6)", 0};
}

CriterionResult c9() {
    BasisConfig cfg;
    cfg.n_modes = 200;
    cfg.quad_points = 400;
    const SpectralParameter E(-1.0);
    bool ok = true;
    std::vector<double> dist;
    for (int n : {1, 2, 4, 8, 16, 32, 64})
        dist.push_back(hs_distance_scaled_to_delta(n, E, cfg));
    for (std::size_t i = 1; i < dist.size(); ++i)
        if (!(dist[i] < dist[i - 1])) ok = false;
    if (!(dist.back() < 0.1 * dist.front())) ok = false;

    const double so = scaled_overlap(0, 0, 100, gauss_hermite(128));
    if (std::abs(so - 1.0) > 1e-3) ok = false;

    BasisConfig bcfg;  // default maps scaled assembly to the validated sizes
    const double eb_delta =
        bound_states(1.0, bcfg, KindSpec::delta(), 1).front().energy;
    double prev_gap = 1e300;
    bool gaps_ok = true;
    for (int n : {1, 2, 4, 8, 16, 32, 64}) {
        const double eb =
            bound_states(1.0, bcfg, KindSpec::scaled(n), 1).front().energy;
        const double gap = std::abs(eb - eb_delta);
        if (!(gap < prev_gap)) gaps_ok = false;
        prev_gap = gap;
    }
    ok = ok && gaps_ok;
    return {9, "scaled impurities converge to the delta line", ok,
            "distance n=1 " + sci(dist.front()) + " -> n=64 " + sci(dist.back()) +
                "; overlap(0,0,100) " + sci(so) + "; final E_b gap " + sci(prev_gap) +
                (gaps_ok ? " (decreasing)" : " (NOT decreasing)"), 0};
}

CriterionResult c10() {
    const std::vector<double> big = logspace(50.0, 500.0, 200);
    std::vector<double> y1(big.size());
    for (std::size_t i = 0; i < big.size(); ++i) y1[i] = -solve_gaussian_bound(big[i]).energy;
    const PowerFit f1 = loglog_fit(big.data(), y1.data(), static_cast<int>(big.size()));

    const std::vector<double> small = logspace(1e-4, 1e-2, 200);
    std::vector<double> y2(small.size());
    for (std::size_t i = 0; i < small.size(); ++i)
        y2[i] = 0.5 - solve_gaussian_bound(small[i]).energy;
    const PowerFit f2 = loglog_fit(small.data(), y2.data(), static_cast<int>(small.size()));

    const bool ok = std::abs(f1.exponent - 4.0) <= 0.02 &&
                    std::abs(f2.exponent - 4.0 / 3.0) <= 0.02;
    std::ostringstream d;
    d << std::setprecision(6) << "large-lambda exponent " << f1.exponent
      << " prefactor " << f1.prefactor << " (closed forms: 81/(4pi^2)="
      << 81.0 / (4.0 * M_PI * M_PI) << ", expansion gives 81/(4pi)="
      << 81.0 / (4.0 * M_PI) << "); small-lambda exponent " << f2.exponent
      << " prefactor " << f2.prefactor << " (closed forms: 1/(4pi^{2/3})="
      << 0.25 * std::pow(M_PI, -2.0 / 3.0) << ", expansion gives 1/(4pi^{1/3})="
      << 0.25 * std::pow(M_PI, -1.0 / 3.0) << "); exponents pinned to 4 and 4/3 "
      << "+/- 0.02, constants reported only";
    return {10, "asymptotic regime exponents from log-log fits", ok, d.str(), 0};
}

CriterionResult c11() {
    bool ok = true;
    std::ostringstream d;
    // Figure-2 style sweep: deterministic, decreasing, below the small-lambda
    // approximation everywhere, above the large-lambda one in the small regime.
    const std::vector<double> lams = logspace(0.01, 20.0, 200);
    const Table t1 = run_lower_bound(lams, LowerBoundSelect::both);
    const Table t2 = run_lower_bound(lams, LowerBoundSelect::both);
    const std::string csv1 = to_csv(t1), csv2 = to_csv(t2);
    if (csv1 != csv2) ok = false;
    double prev = 1e300;
    for (const auto& row : t1.rows) {
        const double lam = row[0], e = row[1];
        const double alarge = row[5], asmall = row[6];
        if (!(e < prev) || !(e < 0.5) || !(e <= asmall)) ok = false;
        if (lam <= 0.1 && !(e >= alarge)) ok = false;
        prev = e;
    }
    const std::vector<double> big = logspace(50.0, 500.0, 50);
    for (double lam : big)
        if (!(solve_gaussian_bound(lam).energy <= asymptotic_large(lam))) ok = false;
    d << "sweep checksum " << fnv1a_hex(csv1)
      << (csv1 == csv2 ? " (stable)" : " (UNSTABLE)") << "; surfaces";
    for (int n : {15, 30, 70}) {
        const std::string s1 = to_csv(delta_surface(n));
        const std::string s2 = to_csv(delta_surface(n));
        if (s1 != s2 || s1.size() < 1000) ok = false;
        d << " n=" << n << ":" << fnv1a_hex(s1);
    }
    return {11, "figure data deterministic and qualitatively correct", ok, d.str(), 0};
}

} // namespace

std::vector<CriterionResult> run_acceptance_criteria() {
    std::vector<CriterionResult (*)()> fns{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11};
    std::vector<CriterionResult> out;
    for (auto* fn : fns) {
        const auto t0 = Clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

int run_acceptance(std::ostream& os) {
    int failures = 0;
    for (const CriterionResult& r : run_acceptance_criteria()) {
        os << (r.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << r.id
           << " [" << std::fixed << std::setprecision(1) << r.seconds << "s] "
           << r.name << " -- " << r.detail << "\n";
        os.unsetf(std::ios::floatfield);
        if (!r.pass) ++failures;
    }
    os << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
       << "\n";
    return failures;
}

} // namespace bsg
