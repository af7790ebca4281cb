#pragma once

// Shared command back-ends: parameter sweeps producing tables, plus the CSV /
// JSON serializers used by the CLI and the verification suite.  All output is
// deterministic: identical inputs yield byte-identical text.

#include <map>
#include <string>
#include <vector>

#include "bsg/lower_bound.hpp"
#include "bsg/solver.hpp"

namespace bsg {

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> meta;  // truncation settings etc.
};

// 17 significant digits: round-trip exact for IEEE doubles.
std::string format_double(double v);

std::string to_csv(const Table& t);
// {"table":…, "metadata":{"config_hash":…, …}, "columns":[…], "rows":[[…]…]}
std::string to_json(const Table& t, const std::string& config_hash);

// FNV-1a 64-bit hash, hex-encoded; used for config hashing and output checksums.
std::string fnv1a_hex(const std::string& data);

// rows (E, trace_bs_squared, hs_bound_gaussian, slack)
Table run_hs_norm(const std::vector<double>& e_list, const BasisConfig& cfg);

enum class LowerBoundSelect { gaussian, delta, both, asymptotics };

// rows (lambda, [E | E_delta | both], residuals, asymptotic_large, asymptotic_small)
Table run_lower_bound(const std::vector<double>& lambdas, LowerBoundSelect which);

// rows (lambda, found, E_b, mu, residual, det2, oracle_energy, discrepancy);
// found = 0 flags a lambda with no bound state on the leading branch.
Table run_bound_states(const std::vector<double>& lambdas, const KindSpec& kind,
                       const BasisConfig& cfg, bool with_oracle = true);

// rows (n, hs_distance, E_b_scaled, E_b_delta, gap)
Table run_delta_limit(const std::vector<int>& n_list, double E, double lambda,
                      const BasisConfig& cfg);

// Surface samples of the impurity profile n e^{-(n^2 x^2 + y^2)} on a fixed
// deterministic grid; rows (x, y, v).
Table delta_surface(int n_scale);

// Evenly / log-evenly spaced grids including both endpoints.
std::vector<double> linspace(double a, double b, int count);
std::vector<double> logspace(double a, double b, int count);  // a, b > 0

} // namespace bsg
