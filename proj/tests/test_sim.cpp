#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gfi/coverage.hpp"

using Catch::Approx;
using namespace gfi::sim;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.methods = {Method::GF, Method::ModGF};
    cfg.n_values = {1, 5};
    cfg.theta_values = {0.3, 0.5};
    cfg.replicates = 50;
    cfg.grid_size = 512;
    cfg.seed = 2024;
    return cfg;
}

}  // namespace

TEST_CASE("method names round-trip") {
    for (Method m : {Method::GF, Method::ModGF, Method::FlatBayes, Method::JeffreysBayes})
        CHECK(parse_method(method_name(m)) == m);
    CHECK_THROWS_AS(parse_method("nope"), gfi::ConfigError);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg = small_config();
    CHECK_NOTHROW(cfg.validate());
    cfg.methods.clear();
    CHECK_THROWS_AS(cfg.validate(), gfi::ConfigError);
    cfg = small_config();
    cfg.theta_values = {1.5};
    CHECK_THROWS_AS(cfg.validate(), gfi::ConfigError);
    cfg = small_config();
    cfg.replicates = 0;
    CHECK_THROWS_AS(cfg.validate(), gfi::ConfigError);
}

TEST_CASE("mc_se formula holds exactly for every record") {
    auto records = run_experiment(small_config());
    for (const auto& r : records) {
        double expected = std::sqrt(r.coverage * (1.0 - r.coverage) / r.replicates);
        CHECK(r.mc_se == expected);
        CHECK(r.coverage >= 0.0);
        CHECK(r.coverage <= 1.0);
        CHECK(r.mean_length >= 0.0);
        CHECK(r.mean_length <= 1.0);
    }
}

TEST_CASE("run_experiment: single cell equals run_cell") {
    ExperimentConfig cfg = small_config();
    cfg.methods = {Method::ModGF};
    cfg.n_values = {5};
    cfg.theta_values = {0.3};
    auto records = run_experiment(cfg);
    REQUIRE(records.size() == 1);
    auto direct = run_cell(Method::ModGF, 5, 0.3, cfg.replicates, cfg.level, cfg.seed,
                           cfg.grid_size);
    CHECK(records[0].coverage == direct.coverage);
    CHECK(records[0].mean_length == direct.mean_length);
}

TEST_CASE("run_experiment: cell values do not depend on listing order") {
    ExperimentConfig cfg = small_config();
    auto forward = run_experiment(cfg);
    ExperimentConfig shuffled = cfg;
    std::reverse(shuffled.methods.begin(), shuffled.methods.end());
    std::reverse(shuffled.n_values.begin(), shuffled.n_values.end());
    std::reverse(shuffled.theta_values.begin(), shuffled.theta_values.end());
    auto backward = run_experiment(shuffled);
    for (const auto& r : forward) {
        auto match = std::find_if(backward.begin(), backward.end(), [&](const CoverageRecord& b) {
            return b.method == r.method && b.n == r.n && b.theta0 == r.theta0;
        });
        REQUIRE(match != backward.end());
        CHECK(match->coverage == r.coverage);
        CHECK(match->mean_length == r.mean_length);
    }
}

TEST_CASE("run_experiment: identical output across worker counts") {
    ExperimentConfig cfg = small_config();
    auto one = run_experiment(cfg, 1);
    auto three = run_experiment(cfg, 3);
    CHECK(to_csv(one) == to_csv(three));
}

TEST_CASE("full reference grid has 320 cells") {
    ExperimentConfig cfg;
    cfg.methods = {Method::GF, Method::ModGF, Method::FlatBayes, Method::JeffreysBayes};
    cfg.n_values = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
    cfg.theta_values = {0.01, 0.03, 0.05, 0.10, 0.20, 0.30, 0.40, 0.50};
    cfg.replicates = 1;
    cfg.grid_size = 64;
    cfg.validate();
    std::size_t count = cfg.methods.size() * cfg.n_values.size() * cfg.theta_values.size();
    CHECK(count == kReferenceTable.size());
    for (Method m : cfg.methods)
        for (int n : cfg.n_values)
            for (double t : cfg.theta_values) CHECK(reference_lookup(m, n, t).has_value());
}

TEST_CASE("emit: header-only CSV, round-trip stability") {
    CHECK(to_csv({}) == "method,n,theta0,coverage,mean_length,mc_se,replicates\n");

    ExperimentConfig cfg = small_config();
    cfg.methods = {Method::JeffreysBayes};
    cfg.n_values = {3};
    cfg.theta_values = {0.25};
    auto records = run_experiment(cfg);
    std::string csv = to_csv(records);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    auto parsed = parse_csv(csv);
    REQUIRE(parsed.size() == 1);
    CHECK(to_csv(parsed) == csv);

    std::string json = to_json(records);
    CHECK(json.find("\"method\":\"JeffreysBayes\"") != std::string::npos);
    CHECK(to_json({}) == "[]\n");
}

TEST_CASE("emit writes files with LF endings") {
    auto records = run_experiment(small_config());
    std::string path = "/tmp/gfi_emit_test.csv";
    emit(records, EmitFormat::Csv, path);
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == to_csv(records));
    CHECK(text.find('\r') == std::string::npos);
    CHECK_THROWS_AS(emit(records, EmitFormat::Csv, "/nonexistent/dir/x.csv"), gfi::Error);
}

TEST_CASE("compare_to_reference: verbatim table passes, perturbation fails") {
    std::vector<CoverageRecord> records;
    for (const auto& cell : kReferenceTable) {
        CoverageRecord r;
        r.method = cell.method;
        r.n = cell.n;
        r.theta0 = cell.theta;
        r.coverage = cell.coverage;
        r.mean_length = cell.length;
        r.replicates = 10000;
        r.mc_se = std::sqrt(r.coverage * (1.0 - r.coverage) / r.replicates);
        records.push_back(r);
    }
    auto report = compare_to_reference(records);
    CHECK(report.overall_pass);
    CHECK(report.passed == records.size());

    records[0].coverage += 10.0 * (0.015 + 3.0 * records[0].mc_se);
    records[0].coverage = std::min(records[0].coverage, 1.0);
    auto report2 = compare_to_reference(records);
    CHECK_FALSE(report2.cells[0].pass);

    CoverageRecord unknown;
    unknown.method = Method::GF;
    unknown.n = 123;
    unknown.theta0 = 0.5;
    CHECK_THROWS_AS(compare_to_reference({unknown}), gfi::UnknownCellError);
}

TEST_CASE("cell estimator variance scales as 1/replicates") {
    // Coverage estimates are binomial proportions, so their variance across
    // repeated runs must drop by ~4x when replicates quadruple.
    // Use a cell with moderate coverage (~0.3) so the binomial variance is
    // well away from the p ~ 1 corner where variance ratios are noisy.
    const int repeats = 160;
    auto variance_at = [&](int reps) {
        std::vector<double> estimates;
        for (int i = 0; i < repeats; ++i) {
            auto rec = run_cell(Method::GF, 1, 0.01, reps, 0.95,
                                static_cast<std::uint64_t>(9000 + i), 512);
            estimates.push_back(rec.coverage);
        }
        double mean = 0.0;
        for (double e : estimates) mean += e;
        mean /= repeats;
        double var = 0.0;
        for (double e : estimates) var += (e - mean) * (e - mean);
        return var / (repeats - 1);
    };
    double v50 = variance_at(50);
    double v200 = variance_at(200);
    double v800 = variance_at(800);
    CHECK(v50 / v200 == Approx(4.0).epsilon(0.30));
    CHECK(v200 / v800 == Approx(4.0).epsilon(0.30));
}
