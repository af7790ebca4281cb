#include "bsg/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bsg {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "," : "") << t.columns[c];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << format_double(row[c]);
        os << "\n";
    }
    return os.str();
}

std::string to_json(const Table& t, const std::string& config_hash) {
    nlohmann::ordered_json j;
    j["table"] = t.name;
    nlohmann::ordered_json meta;
    meta["config_hash"] = config_hash;
    for (const auto& [k, v] : t.meta) meta[k] = v;
    j["metadata"] = meta;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        // serialize through the 17-digit formatter so JSON and CSV agree bytewise
        for (double v : row) r.push_back(nlohmann::ordered_json::parse(
            std::isfinite(v) ? format_double(v) : std::string("null"), nullptr, false));
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& data) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return buf;
}

std::vector<double> linspace(double a, double b, int count) {
    if (count < 1) throw ConfigError("linspace: count must be >= 1");
    std::vector<double> v(count);
    if (count == 1) { v[0] = a; return v; }
    for (int i = 0; i < count; ++i)
        v[i] = a + (b - a) * static_cast<double>(i) / (count - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int count) {
    if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("logspace: endpoints must be > 0");
    std::vector<double> v = linspace(std::log(a), std::log(b), count);
    for (double& x : v) x = std::exp(x);
    return v;
}

Table run_hs_norm(const std::vector<double>& e_list, const BasisConfig& cfg) {
    if (e_list.empty()) throw ConfigError("hs-norm: empty E list");
    cfg.validate();
    Table t;
    t.name = "hs_norm";
    t.columns = {"E", "trace_bs_squared", "hs_bound", "slack"};
    t.meta["n_modes"] = std::to_string(cfg.n_modes);
    t.meta["tail_tol"] = format_double(cfg.tail_tol);
    for (double e : e_list) {
        const SpectralParameter E(e);
        const double tr = trace_bs_squared(E, cfg);
        const double bd = hs_bound_gaussian(E);
        t.rows.push_back({e, tr, bd, bd - tr});
    }
    return t;
}

Table run_lower_bound(const std::vector<double>& lambdas, LowerBoundSelect which) {
    if (lambdas.empty()) throw ConfigError("lower-bound: empty lambda list");
    Table t;
    t.name = "lower_bound";
    const bool want_g = which == LowerBoundSelect::gaussian || which == LowerBoundSelect::both;
    const bool want_d = which == LowerBoundSelect::delta || which == LowerBoundSelect::both;
    t.columns = {"lambda"};
    if (want_g) { t.columns.push_back("E"); t.columns.push_back("residual"); }
    if (want_d) { t.columns.push_back("E_delta"); t.columns.push_back("residual_delta"); }
    t.columns.push_back("asymptotic_large");
    t.columns.push_back("asymptotic_small");
    for (double lam : lambdas) {
        std::vector<double> row{lam};
        if (want_g) {
            const LowerBoundResult r = solve_gaussian_bound(lam);
            row.push_back(r.energy);
            row.push_back(r.residual);
        }
        if (want_d) {
            const LowerBoundResult r = solve_delta_bound(lam);
            row.push_back(r.energy);
            row.push_back(r.residual);
        }
        row.push_back(asymptotic_large(lam));
        row.push_back(asymptotic_small(lam));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_bound_states(const std::vector<double>& lambdas, const KindSpec& kind,
                       const BasisConfig& cfg, bool with_oracle) {
    if (lambdas.empty()) throw ConfigError("bound-states: empty lambda list");
    cfg.validate();
    Table t;
    t.name = "bound_states";
    t.columns = {"lambda", "found", "E_b", "mu", "residual", "det2",
                 "oracle_energy", "discrepancy"};
    t.meta["kind"] = kind.label();
    t.meta["n_modes"] = std::to_string(cfg.n_modes);
    const double nan = std::nan("");
    for (double lam : lambdas) {
        std::vector<double> row{lam, 1.0, nan, nan, nan, nan, nan, nan};
        try {
            const BoundStateResult b = bound_states(lam, cfg, kind, 1).front();
            row[2] = b.energy;
            row[3] = b.bs_eigenvalue;
            row[4] = b.principle_residual;
            row[5] = b.det2_value;
        } catch (const NoBoundState&) {
            row[1] = 0.0;
        }
        if (with_oracle && row[1] == 1.0) {
            const OracleResult o = oracle_ground_state(lam, kind);
            row[6] = o.ground_energy;
            row[7] = std::abs(row[2] - o.ground_energy);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_delta_limit(const std::vector<int>& n_list, double E, double lambda,
                      const BasisConfig& cfg) {
    if (n_list.empty()) throw ConfigError("delta-limit: empty n list");
    cfg.validate();
    const SpectralParameter Es(E);
    Table t;
    t.name = "delta_limit";
    t.columns = {"n", "hs_distance", "E_b_scaled", "E_b_delta", "gap"};
    t.meta["E"] = format_double(E);
    t.meta["lambda"] = format_double(lambda);
    const double eb_delta =
        bound_states(lambda, cfg, KindSpec::delta(), 1).front().energy;
    for (int n : n_list) {
        const double d = hs_distance_scaled_to_delta(n, Es, cfg);
        const double eb =
            bound_states(lambda, cfg, KindSpec::scaled(n), 1).front().energy;
        t.rows.push_back({static_cast<double>(n), d, eb, eb_delta,
                          std::abs(eb - eb_delta)});
    }
    return t;
}

Table delta_surface(int n_scale) {
    if (n_scale < 1) throw ConfigError("delta-limit surface: n must be >= 1");
    Table t;
    t.name = "impurity_surface";
    t.columns = {"x", "y", "v"};
    t.meta["n"] = std::to_string(n_scale);
    const std::vector<double> xs = linspace(-0.3, 0.3, 121);
    const std::vector<double> ys = linspace(-2.5, 2.5, 101);
    for (double x : xs)
        for (double y : ys)
            t.rows.push_back(
                {x, y, n_scale * std::exp(-(static_cast<double>(n_scale) * n_scale * x * x + y * y))});
    return t;
}

} // namespace bsg
