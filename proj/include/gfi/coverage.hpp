#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gfi/density.hpp"
#include "gfi/errors.hpp"
#include "gfi/grid.hpp"
#include "gfi/method.hpp"
#include "gfi/parallel.hpp"
#include "gfi/reference_table.hpp"
#include "gfi/rng.hpp"
#include "gfi/triangular.hpp"

namespace gfi::sim {

/// Coverage-study configuration: the Cartesian product of methods, sample
/// sizes, and parameter values, replicated `replicates` times per cell.
struct ExperimentConfig {
    std::vector<Method> methods;
    std::vector<int> n_values;
    std::vector<double> theta_values;
    int replicates = 10000;
    double level = 0.95;
    std::size_t grid_size = 4096;
    std::uint64_t seed = 0;

    void validate() const {
        if (methods.empty()) throw ConfigError("config: methods must be non-empty");
        if (n_values.empty()) throw ConfigError("config: n_values must be non-empty");
        if (theta_values.empty()) throw ConfigError("config: theta_values must be non-empty");
        for (int n : n_values)
            if (n < 1) throw ConfigError("config: sample sizes must be >= 1");
        for (double t : theta_values)
            if (!(t > 0.0 && t < 1.0)) throw ConfigError("config: theta values must lie in (0,1)");
        if (replicates < 1) throw ConfigError("config: replicates must be >= 1");
        if (!(level > 0.0 && level < 1.0)) throw ConfigError("config: level must lie in (0,1)");
        if (grid_size < 2) throw ConfigError("config: grid_size must be >= 2");
    }
};

/// Empirical coverage and mean interval length of one (method, n, theta)
/// cell, with the binomial Monte-Carlo standard error of the coverage.
struct CoverageRecord {
    Method method = Method::GF;
    int n = 0;
    double theta0 = 0.0;
    double coverage = 0.0;
    double mean_length = 0.0;
    double mc_se = 0.0;
    int replicates = 0;
};

/// Run one cell of the study. Every replicate draws its own stream from
/// (seed, method, n, theta0, replicate), so results are reproducible
/// bit-for-bit no matter how cells or replicates are scheduled.
inline CoverageRecord run_cell(Method method, int n, double theta0, int replicates,
                               double level, std::uint64_t seed,
                               std::size_t grid_size = 4096) {
    if (n < 1 || replicates < 1 || !(level > 0.0 && level < 1.0))
        throw ConfigError("run_cell: invalid cell parameters");
    triangular::TriangularParam truth(theta0);
    triangular::ThetaTables tables(Grid(0.0, 1.0, grid_size));

    long hits = 0;
    double total_length = 0.0;
    for (int rep = 0; rep < replicates; ++rep) {
        Rng rng = StreamKey(seed)
                      .fold(static_cast<int>(method))
                      .fold(n)
                      .fold(theta0)
                      .fold(rep)
                      .rng();
        triangular::TriangularSample sample =
            triangular::draw(static_cast<std::size_t>(n), truth, rng);
        Interval interval;
        switch (method) {
            case Method::GF:
                interval = equal_tailed_interval(triangular::gfd(sample, tables), level);
                break;
            case Method::ModGF:
                interval = equal_tailed_interval(triangular::modified_gfd(sample, tables), level);
                break;
            case Method::FlatBayes:
                interval = equal_tailed_interval(
                    triangular::bayes_posterior(sample, triangular::Prior::Flat, tables), level);
                break;
            case Method::JeffreysBayes:
                interval = equal_tailed_interval(
                    triangular::bayes_posterior(sample, triangular::Prior::Jeffreys, tables),
                    level);
                break;
        }
        if (interval.contains(theta0)) ++hits;
        total_length += interval.length();
    }

    CoverageRecord rec;
    rec.method = method;
    rec.n = n;
    rec.theta0 = theta0;
    rec.replicates = replicates;
    rec.coverage = static_cast<double>(hits) / replicates;
    rec.mean_length = total_length / replicates;
    rec.mc_se = std::sqrt(rec.coverage * (1.0 - rec.coverage) / replicates);
    return rec;
}

/// Run the full Cartesian product. Cells execute on a worker pool; the
/// output order is the (method, n, theta) config order regardless of
/// scheduling, and every value is independent of the worker count.
inline std::vector<CoverageRecord> run_experiment(const ExperimentConfig& config,
                                                  unsigned workers = 0) {
    config.validate();
    struct CellKey {
        Method method;
        int n;
        double theta;
    };
    std::vector<CellKey> cells;
    for (Method m : config.methods)
        for (int n : config.n_values)
            for (double t : config.theta_values) cells.push_back({m, n, t});

    std::vector<CoverageRecord> records(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        const CellKey& c = cells[i];
        records[i] = run_cell(c.method, c.n, c.theta, config.replicates, config.level,
                              config.seed, config.grid_size);
    });
    return records;
}

// ---------------------------------------------------------------------------
// Persistence: CSV and JSON with full (17 significant digit) precision.
// ---------------------------------------------------------------------------

enum class EmitFormat { Csv, Json };

namespace detail {

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline std::string to_csv(const std::vector<CoverageRecord>& records) {
    std::string out = "method,n,theta0,coverage,mean_length,mc_se,replicates\n";
    for (const auto& r : records) {
        out += method_name(r.method);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += detail::format_real(r.theta0);
        out += ',';
        out += detail::format_real(r.coverage);
        out += ',';
        out += detail::format_real(r.mean_length);
        out += ',';
        out += detail::format_real(r.mc_se);
        out += ',';
        out += std::to_string(r.replicates);
        out += '\n';
    }
    return out;
}

inline std::string to_json(const std::vector<CoverageRecord>& records) {
    std::string out = "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i > 0) out += ',';
        out += "\n  {\"method\":\"";
        out += method_name(r.method);
        out += "\",\"n\":" + std::to_string(r.n);
        out += ",\"theta0\":" + detail::format_real(r.theta0);
        out += ",\"coverage\":" + detail::format_real(r.coverage);
        out += ",\"mean_length\":" + detail::format_real(r.mean_length);
        out += ",\"mc_se\":" + detail::format_real(r.mc_se);
        out += ",\"replicates\":" + std::to_string(r.replicates);
        out += "}";
    }
    out += records.empty() ? "]\n" : "\n]\n";
    return out;
}

inline void emit(const std::vector<CoverageRecord>& records, EmitFormat format,
                 const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("emit: cannot open " + path + " for writing");
    out << (format == EmitFormat::Csv ? to_csv(records) : to_json(records));
    if (!out) throw Error("emit: write failed for " + path);
}

/// Parse records back from the CSV produced by to_csv (round-trips exactly).
inline std::vector<CoverageRecord> parse_csv(const std::string& text) {
    std::vector<CoverageRecord> records;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error("parse_csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        CoverageRecord r;
        std::getline(row, field, ',');
        r.method = parse_method(field);
        std::getline(row, field, ',');
        r.n = std::stoi(field);
        std::getline(row, field, ',');
        r.theta0 = std::strtod(field.c_str(), nullptr);
        std::getline(row, field, ',');
        r.coverage = std::strtod(field.c_str(), nullptr);
        std::getline(row, field, ',');
        r.mean_length = std::strtod(field.c_str(), nullptr);
        std::getline(row, field, ',');
        r.mc_se = std::strtod(field.c_str(), nullptr);
        std::getline(row, field, ',');
        r.replicates = std::stoi(field);
        records.push_back(r);
    }
    return records;
}

// ---------------------------------------------------------------------------
// Comparison against the embedded reference table.
// ---------------------------------------------------------------------------

struct CellComparison {
    CoverageRecord record;
    ReferenceCell reference;
    double coverage_error = 0.0;
    double length_error = 0.0;
    double coverage_tolerance = 0.0;
    double length_tolerance = 0.0;
    bool pass = false;
};

struct ComparisonReport {
    std::vector<CellComparison> cells;
    std::size_t passed = 0;
    bool overall_pass = false;

    double pass_fraction() const {
        return cells.empty() ? 0.0 : static_cast<double>(passed) / cells.size();
    }
};

/// Per-cell comparison: coverage within tolerance_coverage + 3 * mc_se,
/// length within tolerance_length. Overall pass requires at least 95% of
/// cells to pass.
inline ComparisonReport compare_to_reference(const std::vector<CoverageRecord>& records,
                                             double tolerance_coverage = 0.015,
                                             double tolerance_length = 0.02) {
    ComparisonReport report;
    for (const auto& r : records) {
        auto ref = reference_lookup(r.method, r.n, r.theta0);
        if (!ref) {
            std::ostringstream msg;
            msg << "compare_to_reference: no reference cell for " << method_name(r.method)
                << " n=" << r.n << " theta=" << r.theta0;
            throw UnknownCellError(msg.str());
        }
        CellComparison c;
        c.record = r;
        c.reference = *ref;
        c.coverage_error = std::abs(r.coverage - ref->coverage);
        c.length_error = std::abs(r.mean_length - ref->length);
        c.coverage_tolerance = tolerance_coverage + 3.0 * r.mc_se;
        c.length_tolerance = tolerance_length;
        c.pass = c.coverage_error <= c.coverage_tolerance && c.length_error <= c.length_tolerance;
        if (c.pass) ++report.passed;
        report.cells.push_back(c);
    }
    report.overall_pass =
        !report.cells.empty() &&
        static_cast<double>(report.passed) >= 0.95 * static_cast<double>(report.cells.size());
    return report;
}

}  // namespace gfi::sim
