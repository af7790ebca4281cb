// Command-line front end: parameter sweeps, figure-data emission, optional
// result caching, and the verification suite.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bsg/acceptance.hpp"
#include "bsg/report.hpp"

namespace {

struct CommonOpts {
    int modes = 128;
    int quad = 256;
    double tol = 1e-5;
    std::string format = "csv";
    std::string out;
    std::string cache_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--modes", o.modes, "oscillator-mode truncation");
    cmd->add_option("--quad", o.quad, "quadrature points (>= 2*modes)");
    cmd->add_option("--tol", o.tol, "certified series tail tolerance");
    cmd->add_option("--format", o.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--cache-dir", o.cache_dir,
                    "cache directory (opt-in result caching)");
}

bsg::BasisConfig make_cfg(const CommonOpts& o) {
    bsg::BasisConfig cfg;
    cfg.n_modes = o.modes;
    cfg.quad_points = o.quad;
    cfg.tail_tol = o.tol;
    cfg.validate();
    return cfg;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw bsg::ConfigError("cannot open output file: " + path);
    f << text;
}

// Emit a table (and optional side tables), serving from / filling the cache.
void emit(const CommonOpts& o, const std::string& key_src,
          const std::function<std::string()>& render) {
    const std::string key = bsg::fnv1a_hex(key_src + "|" + o.format);
    std::filesystem::path cache_file;
    if (!o.cache_dir.empty()) {
        std::filesystem::create_directories(o.cache_dir);
        cache_file = std::filesystem::path(o.cache_dir) /
                     (key + (o.format == "csv" ? ".csv" : ".json"));
        if (std::filesystem::exists(cache_file)) {
            std::ifstream f(cache_file, std::ios::binary);
            std::stringstream ss;
            ss << f.rdbuf();
            write_text(o.out, ss.str());
            return;
        }
    }
    const std::string text = render();
    if (!cache_file.empty()) {
        std::ofstream f(cache_file, std::ios::binary);
        f << text;
    }
    write_text(o.out, text);
}

std::string render_table(const bsg::Table& t, const CommonOpts& o,
                         const std::string& key_src) {
    return o.format == "csv" ? bsg::to_csv(t)
                             : bsg::to_json(t, bsg::fnv1a_hex(key_src));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Birman-Schwinger analysis of a Gaussian impurity in a "
                 "2D quantum wire with harmonic transverse confinement"};
    app.require_subcommand(1);

    // hs-norm ---------------------------------------------------------------
    auto* hs = app.add_subcommand("hs-norm",
                                  "trace of the squared BS kernel vs its closed-form bound");
    CommonOpts hso;
    double e_min = -10.0, e_max = 0.0;
    int e_count = 11;
    hs->add_option("--e-min", e_min, "lowest spectral parameter E");
    hs->add_option("--e-max", e_max, "highest spectral parameter E (< 1/2)");
    hs->add_option("--e-count", e_count, "number of E samples");
    add_common(hs, hso);

    // lower-bound -------------------------------------------------------------
    auto* lb = app.add_subcommand("lower-bound",
                                  "ground-energy lower bound E(lambda) sweeps");
    CommonOpts lbo;
    double lb_min = 0.01, lb_max = 20.0;
    int lb_count = 200;
    bool lb_log = false;
    std::string which = "both";
    lb->add_option("--lambda-min", lb_min, "lowest coupling");
    lb->add_option("--lambda-max", lb_max, "highest coupling");
    lb->add_option("--lambda-count", lb_count, "number of couplings");
    lb->add_flag("--log-spaced", lb_log, "log-spaced coupling grid");
    lb->add_option("--which", which, "gaussian | delta | both | asymptotics")
        ->check(CLI::IsMember({"gaussian", "delta", "both", "asymptotics"}));
    add_common(lb, lbo);

    // bound-states ------------------------------------------------------------
    auto* bs = app.add_subcommand("bound-states",
                                  "bound-state energies from the BS principle");
    CommonOpts bso;
    double bs_min = 0.5, bs_max = 2.0;
    int bs_count = 3;
    bool bs_log = false, bs_no_oracle = false;
    std::string bs_kind = "gaussian";
    bs->add_option("--lambda-min", bs_min, "lowest coupling");
    bs->add_option("--lambda-max", bs_max, "highest coupling");
    bs->add_option("--lambda-count", bs_count, "number of couplings");
    bs->add_flag("--log-spaced", bs_log, "log-spaced coupling grid");
    bs->add_option("--kind", bs_kind, "gaussian | delta | scaled:<n>");
    bs->add_flag("--no-oracle", bs_no_oracle,
                 "skip the direct-diagonalization cross-check columns");
    add_common(bs, bso);

    // delta-limit --------------------------------------------------------------
    auto* dl = app.add_subcommand("delta-limit",
                                  "convergence of scaled impurities to the delta line");
    CommonOpts dlo;
    std::vector<int> n_scales{1, 2, 4, 8, 16, 32, 64};
    std::vector<int> surface_n;
    double dl_e = -1.0, dl_lambda = 1.0;
    dl->add_option("--n-scales", n_scales, "scaling parameters n");
    dl->add_option("--surfaces", surface_n,
                   "emit impurity surface grids for these n (e.g. 15 30 70)");
    dl->add_option("--energy", dl_e, "spectral parameter E (< 0)");
    dl->add_option("--lambda", dl_lambda, "coupling for the bound-state column");
    add_common(dl, dlo);

    // verify ---------------------------------------------------------------
    app.add_subcommand("verify", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (hs->parsed()) {
            const auto key = "hs-norm " + std::to_string(e_min) + " " +
                             std::to_string(e_max) + " " + std::to_string(e_count) +
                             " m" + std::to_string(hso.modes) + " t" +
                             bsg::format_double(hso.tol);
            emit(hso, key, [&] {
                return render_table(
                    bsg::run_hs_norm(bsg::linspace(e_min, e_max, e_count), make_cfg(hso)),
                    hso, key);
            });
        } else if (lb->parsed()) {
            const auto key = "lower-bound " + std::to_string(lb_min) + " " +
                             std::to_string(lb_max) + " " + std::to_string(lb_count) +
                             (lb_log ? " log " : " lin ") + which;
            emit(lbo, key, [&] {
                const auto lams = lb_log ? bsg::logspace(lb_min, lb_max, lb_count)
                                         : bsg::linspace(lb_min, lb_max, lb_count);
                bsg::LowerBoundSelect sel = bsg::LowerBoundSelect::both;
                if (which == "gaussian") sel = bsg::LowerBoundSelect::gaussian;
                else if (which == "delta") sel = bsg::LowerBoundSelect::delta;
                else if (which == "asymptotics") sel = bsg::LowerBoundSelect::asymptotics;
                return render_table(bsg::run_lower_bound(lams, sel), lbo, key);
            });
        } else if (bs->parsed()) {
            bsg::KindSpec kind = bsg::KindSpec::gaussian();
            if (bs_kind == "delta") kind = bsg::KindSpec::delta();
            else if (bs_kind.rfind("scaled:", 0) == 0)
                kind = bsg::KindSpec::scaled(std::stoi(bs_kind.substr(7)));
            else if (bs_kind != "gaussian")
                throw bsg::ConfigError("unknown kind: " + bs_kind);
            const auto key = "bound-states " + std::to_string(bs_min) + " " +
                             std::to_string(bs_max) + " " + std::to_string(bs_count) +
                             (bs_log ? " log " : " lin ") + kind.label() + " m" +
                             std::to_string(bso.modes) +
                             (bs_no_oracle ? " no-oracle" : "");
            emit(bso, key, [&] {
                const auto lams = bs_log ? bsg::logspace(bs_min, bs_max, bs_count)
                                         : bsg::linspace(bs_min, bs_max, bs_count);
                return render_table(
                    bsg::run_bound_states(lams, kind, make_cfg(bso), !bs_no_oracle),
                    bso, key);
            });
        } else if (dl->parsed()) {
            std::ostringstream ks;
            ks << "delta-limit E" << dl_e << " l" << dl_lambda << " n";
            for (int n : n_scales) ks << n << ",";
            ks << " s";
            for (int n : surface_n) ks << n << ",";
            ks << " m" << dlo.modes;
            const std::string key = ks.str();
            emit(dlo, key, [&] {
                std::string text = render_table(
                    bsg::run_delta_limit(n_scales, dl_e, dl_lambda, make_cfg(dlo)),
                    dlo, key);
                for (int n : surface_n) {
                    const bsg::Table s = bsg::delta_surface(n);
                    if (dlo.out.empty()) {
                        text += "\n# surface n=" + std::to_string(n) + "\n" +
                                render_table(s, dlo, key);
                    } else {
                        const auto stem = std::filesystem::path(dlo.out);
                        auto p = stem;
                        p.replace_filename(stem.stem().string() + "_surface_n" +
                                           std::to_string(n) +
                                           stem.extension().string());
                        std::ofstream f(p, std::ios::binary);
                        if (!f) throw bsg::ConfigError("cannot open " + p.string());
                        f << render_table(s, dlo, key);
                    }
                }
                return text;
            });
        } else {  // verify
            return bsg::run_acceptance(std::cout) == 0 ? 0 : 3;
        }
    } catch (const bsg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
