// Command-line front end for the coverage study, the normal-limit TV decay
// diagnostic, the free-knot spline demo, and verification against the
// embedded reference table.
//
// Exit codes: 0 success (and verify-pass), 1 runtime failure or verify-fail,
// 2 configuration error.

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gfi/bvm.hpp"
#include "gfi/coverage.hpp"
#include "gfi/parallel.hpp"
#include "gfi/spline.hpp"
#include "gfi/spline_sampler.hpp"
#include "gfi/triangular.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (const auto& tok : split_list(text)) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split_list(text)) out.push_back(std::stod(tok));
    return out;
}

// Settings shared by the coverage and verify subcommands. String fields keep
// the "unset" state so the precedence config-file < flag is easy to apply.
struct CellOptions {
    std::string methods;
    std::string n_values;
    std::string theta_values;
    int replicates = -1;
    double level = -1.0;
    long grid_size = -1;
    std::string seed;
    std::string config_path;
};

void apply_config_file(const std::string& path, gfi::sim::ExperimentConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw gfi::ConfigError("config: cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            auto last = s.find_last_not_of(" \t\r");
            s.erase(last == std::string::npos ? 0 : last + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        try {
            if (key == "methods") {
                cfg.methods.clear();
                for (const auto& tok : split_list(value))
                    cfg.methods.push_back(gfi::sim::parse_method(tok));
            } else if (key == "n_values") {
                cfg.n_values = parse_ints(value);
            } else if (key == "theta_values") {
                cfg.theta_values = parse_reals(value);
            } else if (key == "replicates") {
                cfg.replicates = std::stoi(value);
            } else if (key == "level") {
                cfg.level = std::stod(value);
            } else if (key == "grid_size") {
                cfg.grid_size = static_cast<std::size_t>(std::stoul(value));
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else {
                throw gfi::ConfigError("config: unknown key '" + key + "' in " + path);
            }
        } catch (const std::invalid_argument&) {
            throw gfi::ConfigError("config: bad value for '" + key + "' in " + path);
        }
    }
}

gfi::sim::ExperimentConfig build_config(const CellOptions& opt,
                                        const gfi::sim::ExperimentConfig& defaults) {
    gfi::sim::ExperimentConfig cfg = defaults;
    if (!opt.config_path.empty()) apply_config_file(opt.config_path, cfg);
    try {
        if (!opt.methods.empty()) {
            cfg.methods.clear();
            for (const auto& tok : split_list(opt.methods))
                cfg.methods.push_back(gfi::sim::parse_method(tok));
        }
        if (!opt.n_values.empty()) cfg.n_values = parse_ints(opt.n_values);
        if (!opt.theta_values.empty()) cfg.theta_values = parse_reals(opt.theta_values);
        if (!opt.seed.empty()) cfg.seed = std::stoull(opt.seed);
    } catch (const std::invalid_argument&) {
        throw gfi::ConfigError("invalid numeric value in a list flag");
    }
    if (opt.replicates >= 0) cfg.replicates = opt.replicates;
    if (opt.level >= 0.0) cfg.level = opt.level;
    if (opt.grid_size >= 0) cfg.grid_size = static_cast<std::size_t>(opt.grid_size);
    // the one environment override: the stream seed
    if (const char* env_seed = std::getenv("GFI_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed);
        } catch (const std::invalid_argument&) {
            throw gfi::ConfigError("GFI_SEED is not an integer");
        }
    }
    cfg.validate();
    return cfg;
}

void add_cell_flags(CLI::App* cmd, CellOptions& opt) {
    cmd->add_option("--methods", opt.methods,
                    "comma list from GF,ModGF,FlatBayes,JeffreysBayes");
    cmd->add_option("--n-values", opt.n_values, "comma list of sample sizes");
    cmd->add_option("--theta-values", opt.theta_values, "comma list of true parameters in (0,1)");
    cmd->add_option("--replicates", opt.replicates, "Monte-Carlo replicates per cell");
    cmd->add_option("--level", opt.level, "interval level (default 0.95)");
    cmd->add_option("--grid-size", opt.grid_size, "number of grid cells on (0,1)");
    cmd->add_option("--seed", opt.seed, "64-bit stream seed (GFI_SEED overrides)");
    cmd->add_option("--config", opt.config_path, "key=value file with the same field names");
}

int cmd_coverage(const CellOptions& opt, unsigned workers, const std::string& out_path,
                 const std::string& format) {
    gfi::sim::ExperimentConfig defaults;
    defaults.methods = {gfi::sim::Method::GF, gfi::sim::Method::ModGF,
                        gfi::sim::Method::FlatBayes, gfi::sim::Method::JeffreysBayes};
    defaults.n_values = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
    defaults.theta_values = {0.01, 0.03, 0.05, 0.10, 0.20, 0.30, 0.40, 0.50};
    auto cfg = build_config(opt, defaults);

    if (format != "csv" && format != "json")
        throw gfi::ConfigError("--format must be csv or json");
    auto records = gfi::sim::run_experiment(cfg, workers);
    std::string text = format == "csv" ? gfi::sim::to_csv(records) : gfi::sim::to_json(records);
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        gfi::sim::emit(records,
                       format == "csv" ? gfi::sim::EmitFormat::Csv : gfi::sim::EmitFormat::Json,
                       out_path);
        std::fprintf(stderr, "wrote %zu records to %s\n", records.size(), out_path.c_str());
    }
    return 0;
}

int cmd_verify(const CellOptions& opt, unsigned workers, double tol_cov, double tol_len,
               bool quiet) {
    gfi::sim::ExperimentConfig defaults;
    defaults.methods = {gfi::sim::Method::GF, gfi::sim::Method::ModGF,
                        gfi::sim::Method::FlatBayes, gfi::sim::Method::JeffreysBayes};
    defaults.n_values = {50, 100, 200, 500};
    defaults.theta_values = {0.05, 0.1, 0.3, 0.5};
    auto cfg = build_config(opt, defaults);

    auto records = gfi::sim::run_experiment(cfg, workers);
    auto report = gfi::sim::compare_to_reference(records, tol_cov, tol_len);
    for (const auto& c : report.cells) {
        if (quiet && c.pass) continue;
        std::printf("%s %-14s n=%4d theta=%.2f  cov %.4f vs %.3f (tol %.4f)  len %.4f vs %.4f (tol %.4f)\n",
                    c.pass ? "ok  " : "FAIL", gfi::sim::method_name(c.record.method), c.record.n,
                    c.record.theta0, c.record.coverage, c.reference.coverage,
                    c.coverage_tolerance, c.record.mean_length, c.reference.length,
                    c.length_tolerance);
    }
    std::printf("verify: %zu/%zu cells within tolerance (%.1f%%), overall %s\n", report.passed,
                report.cells.size(), 100.0 * report.pass_fraction(),
                report.overall_pass ? "PASS" : "FAIL");
    return report.overall_pass ? 0 : 1;
}

int cmd_bvm(const std::string& theta_list, const std::string& n_list, int replicates,
            long grid_size, const std::string& seed_text, const std::string& out_path) {
    std::vector<double> thetas = parse_reals(theta_list.empty() ? "0.2,0.5" : theta_list);
    std::vector<int> ns = parse_ints(n_list.empty() ? "20,100,500,2000" : n_list);
    std::uint64_t seed = seed_text.empty() ? 424242 : std::stoull(seed_text);
    if (const char* env_seed = std::getenv("GFI_SEED")) seed = std::stoull(env_seed);
    if (replicates < 1 || grid_size < 2) throw gfi::ConfigError("bvm: bad replicates/grid");

    gfi::Grid grid(0.0, 1.0, static_cast<std::size_t>(grid_size));
    gfi::triangular::ThetaTables tables(grid);
    std::string csv = "theta0,n,replicates,mean_tv,se_tv\n";
    for (double theta0 : thetas) {
        gfi::triangular::TriangularParam p(theta0);
        double info = gfi::triangular::fisher_info(p);
        Eigen::MatrixXd info_m(1, 1), cov(1, 1);
        info_m << info;
        cov << 1.0 / info;
        Eigen::VectorXd t0(1);
        t0 << theta0;
        for (int n : ns) {
            std::vector<double> tvs(static_cast<std::size_t>(replicates));
            gfi::parallel_for(tvs.size(), 0, [&](std::size_t r) {
                gfi::Rng rng = gfi::StreamKey(seed)
                                   .fold(theta0)
                                   .fold(n)
                                   .fold(static_cast<int>(r))
                                   .rng();
                auto sample = gfi::triangular::draw(static_cast<std::size_t>(n), p, rng);
                auto fid = gfi::triangular::gfd(sample, tables);
                Eigen::MatrixXd scores(sample.size(), 1);
                for (std::size_t i = 0; i < sample.size(); ++i)
                    scores(static_cast<Eigen::Index>(i), 0) =
                        gfi::triangular::score(sample.y[i], p);
                gfi::bvm::GaussianLimit lim(gfi::bvm::delta_n(scores, info_m), cov, t0,
                                            static_cast<std::size_t>(n));
                tvs[r] = gfi::bvm::bvm_tv(fid, lim);
            });
            double mean = std::accumulate(tvs.begin(), tvs.end(), 0.0) / tvs.size();
            double var = 0.0;
            for (double tv : tvs) var += (tv - mean) * (tv - mean);
            double se = tvs.size() > 1
                            ? std::sqrt(var / (static_cast<double>(tvs.size()) *
                                               (static_cast<double>(tvs.size()) - 1.0)))
                            : 0.0;
            char line[160];
            std::snprintf(line, sizeof(line), "%.17g,%d,%d,%.17g,%.17g\n", theta0, n,
                          replicates, mean, se);
            csv += line;
        }
    }
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw gfi::Error("bvm: cannot open " + out_path);
        out << csv;
    }
    return 0;
}

int cmd_spline_demo(std::size_t n, double knot, double sigma, int steps,
                    const std::string& seed_text) {
    std::uint64_t seed = seed_text.empty() ? 7 : std::stoull(seed_text);
    if (const char* env_seed = std::getenv("GFI_SEED")) seed = std::stoull(env_seed);

    gfi::spline::SplineModel truth;
    truth.p = 1;
    truth.knots = {knot};
    truth.alpha = Eigen::Vector3d(0.2, 1.0, -2.5);
    truth.sigma = sigma;
    truth.validate();

    gfi::Rng rng = gfi::StreamKey(seed).fold(1).rng();
    auto data = gfi::spline::simulate(truth, n, rng);
    auto chain = gfi::spline::sample_gfd(data, truth, steps, seed);

    std::printf("free-knot spline demo: degree %d, %d knot(s), n=%zu, %zu retained draws, "
                "acceptance %.2f\n",
                truth.p, truth.kappa(), n, chain.size(), chain.acceptance_rate);
    const char* names[] = {"alpha0", "alpha1", "alpha2", "t1", "sigma"};
    const double tr[] = {truth.alpha(0), truth.alpha(1), truth.alpha(2), truth.knots[0],
                         truth.sigma};
    for (int j = 0; j < truth.n_params(); ++j) {
        std::vector<double> series(chain.size());
        for (std::size_t i = 0; i < chain.size(); ++i) series[i] = chain.draws[i](j);
        std::sort(series.begin(), series.end());
        double mean = std::accumulate(series.begin(), series.end(), 0.0) /
                      static_cast<double>(series.size());
        auto q = [&](double p_) {
            return series[static_cast<std::size_t>(p_ * (static_cast<double>(series.size()) - 1.0))];
        };
        std::printf("  %-6s truth %8.4f  mean %8.4f  95%% interval [%8.4f, %8.4f]\n", names[j],
                    tr[j], mean, q(0.025), q(0.975));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized fiducial inference toolkit"};
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = hardware)");

    CellOptions cov_opt;
    std::string cov_out, cov_format = "csv";
    auto* cov_cmd = app.add_subcommand("coverage", "run the interval coverage study");
    add_cell_flags(cov_cmd, cov_opt);
    cov_cmd->add_option("--out", cov_out, "output path (default stdout)");
    cov_cmd->add_option("--format", cov_format, "csv or json");

    CellOptions ver_opt;
    double tol_cov = 0.015, tol_len = 0.02;
    bool ver_quiet = false;
    auto* ver_cmd = app.add_subcommand("verify", "compare a run against the reference table");
    add_cell_flags(ver_cmd, ver_opt);
    ver_cmd->add_option("--tolerance-coverage", tol_cov, "coverage tolerance before 3*mc_se");
    ver_cmd->add_option("--tolerance-length", tol_len, "length tolerance");
    ver_cmd->add_flag("--quiet", ver_quiet, "print failing cells only");

    std::string bvm_thetas, bvm_ns, bvm_seed, bvm_out;
    int bvm_reps = 50;
    long bvm_grid = 4096;
    auto* bvm_cmd = app.add_subcommand("bvm", "TV decay toward the limiting Gaussian");
    bvm_cmd->add_option("--theta-values", bvm_thetas, "comma list (default 0.2,0.5)");
    bvm_cmd->add_option("--n-values", bvm_ns, "comma list (default 20,100,500,2000)");
    bvm_cmd->add_option("--replicates", bvm_reps, "replicates per (theta, n)");
    bvm_cmd->add_option("--grid-size", bvm_grid, "grid cells on (0,1)");
    bvm_cmd->add_option("--seed", bvm_seed, "stream seed");
    bvm_cmd->add_option("--out", bvm_out, "output CSV path (default stdout)");

    std::size_t demo_n = 500;
    double demo_knot = 0.5, demo_sigma = 0.3;
    int demo_steps = 15000;
    std::string demo_seed;
    auto* demo_cmd = app.add_subcommand("spline-demo", "fiducial chain for a free-knot spline");
    demo_cmd->add_option("--n", demo_n, "observations to simulate");
    demo_cmd->add_option("--knot", demo_knot, "true knot location");
    demo_cmd->add_option("--sigma", demo_sigma, "true noise scale");
    demo_cmd->add_option("--steps", demo_steps, "chain sweeps (20% warm-up)");
    demo_cmd->add_option("--seed", demo_seed, "stream seed");

    try {
        app.parse(argc, argv);
        if (cov_cmd->parsed()) return cmd_coverage(cov_opt, workers, cov_out, cov_format);
        if (ver_cmd->parsed()) return cmd_verify(ver_opt, workers, tol_cov, tol_len, ver_quiet);
        if (bvm_cmd->parsed())
            return cmd_bvm(bvm_thetas, bvm_ns, bvm_reps, bvm_grid, bvm_seed, bvm_out);
        if (demo_cmd->parsed())
            return cmd_spline_demo(demo_n, demo_knot, demo_sigma, demo_steps, demo_seed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const gfi::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
