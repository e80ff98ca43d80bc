#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gfi/density.hpp"
#include "gfi/errors.hpp"
#include "gfi/grid.hpp"
#include "gfi/rng.hpp"

namespace gfi::triangular {

/// Mode of the triangular density on (0,1).
struct TriangularParam {
    double theta;

    explicit TriangularParam(double t) : theta(t) {
        if (!(t > 0.0 && t < 1.0))
            throw OutOfDomainError("TriangularParam: theta must lie in (0,1)");
    }
};

/// Observations from the triangular model; every entry lies in (0,1).
struct TriangularSample {
    std::vector<double> y;

    TriangularSample() = default;
    explicit TriangularSample(std::vector<double> values) : y(std::move(values)) {
        for (double v : y)
            if (!(v > 0.0 && v < 1.0))
                throw OutOfDomainError("TriangularSample: values must lie in (0,1)");
    }

    std::size_t size() const { return y.size(); }
};

/// Density: 2y/theta on (0, theta], (2-2y)/(1-theta) on (theta, 1).
inline double pdf(double y, TriangularParam p) {
    if (!(y > 0.0 && y < 1.0)) throw OutOfDomainError("pdf: y must lie in (0,1)");
    return y <= p.theta ? 2.0 * y / p.theta : (2.0 - 2.0 * y) / (1.0 - p.theta);
}

/// CDF: y^2/theta then 1 - (1-y)^2/(1-theta); clamped to 0/1 outside (0,1).
inline double cdf(double y, TriangularParam p) {
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    if (y <= p.theta) return y * y / p.theta;
    return 1.0 - (1.0 - y) * (1.0 - y) / (1.0 - p.theta);
}

/// Data-generating algorithm: the inverse CDF applied to u ~ U(0,1).
inline double dga(double u, TriangularParam p) {
    if (!(u > 0.0 && u < 1.0)) throw OutOfDomainError("dga: u must lie in (0,1)");
    if (u <= p.theta) return std::sqrt(u * p.theta);
    return 1.0 - std::sqrt((1.0 - u) * (1.0 - p.theta));
}

/// n draws through the DGA with a caller-owned stream.
inline TriangularSample draw(std::size_t n, TriangularParam p, Rng& rng) {
    std::vector<double> y(n);
    for (auto& v : y) v = dga(rng.uniform_open01(), p);
    return TriangularSample(std::move(y));
}

/// Score function: -1/theta on (0, theta], 1/(1-theta) on (theta, 1).
inline double score(double y, TriangularParam p) {
    if (!(y > 0.0 && y < 1.0)) throw OutOfDomainError("score: y must lie in (0,1)");
    return y <= p.theta ? -1.0 / p.theta : 1.0 / (1.0 - p.theta);
}

/// Fisher information 1/(theta (1-theta)).
inline double fisher_info(TriangularParam p) {
    return 1.0 / (p.theta * (1.0 - p.theta));
}

/// Preimage of a single observation under the DGA, as a function of u.
///
/// The unmodified map is empty for u < y^2 and u > 1-(1-y)^2; the modified
/// map sends those ranges to the boundary points 1 and 0 respectively. The
/// branch boundaries u = y^2 and u = 1-(1-y)^2 hit the values 1 and 0
/// exactly; the unmodified map reports them as Value while the modified map
/// folds them into the boundary kinds (a measure-zero convention).
struct InverseImage {
    enum class Kind { Empty, Value, AtZero, AtOne };

    Kind kind = Kind::Empty;
    std::optional<double> value;

    static InverseImage empty() { return {Kind::Empty, std::nullopt}; }
    static InverseImage at(double v) { return {Kind::Value, v}; }
    static InverseImage at_zero() { return {Kind::AtZero, 0.0}; }
    static InverseImage at_one() { return {Kind::AtOne, 1.0}; }
};

inline InverseImage inverse_image(double y, double u, bool modified) {
    if (!(y > 0.0 && y < 1.0)) throw OutOfDomainError("inverse_image: y must lie in (0,1)");
    if (!(u > 0.0 && u < 1.0)) throw OutOfDomainError("inverse_image: u must lie in (0,1)");
    const double lo_cut = y * y;
    const double hi_cut = 1.0 - (1.0 - y) * (1.0 - y);
    if (u < lo_cut) return modified ? InverseImage::at_one() : InverseImage::empty();
    if (u > hi_cut) return modified ? InverseImage::at_zero() : InverseImage::empty();
    if (u < y) {
        double v = lo_cut / u;  // equals 1 at u == y^2
        if (v >= 1.0) return modified ? InverseImage::at_one() : InverseImage::at(1.0);
        return InverseImage::at(v);
    }
    double v = 1.0 - (1.0 - y) * (1.0 - y) / (1.0 - u);  // equals 0 at u == hi_cut
    if (v <= 0.0) return modified ? InverseImage::at_zero() : InverseImage::at(0.0);
    return InverseImage::at(v);
}

/// Jacobian function: root mean square of y_i/(2 theta) over y_i <= theta
/// and (1-y_i)/(2(1-theta)) over y_i > theta. Always in (0, 1/2]; for data
/// generated from theta it converges to sqrt(1/8).
inline double jacobian(const TriangularSample& sample, TriangularParam p) {
    if (sample.size() == 0) throw Error("jacobian: sample must be non-empty");
    double acc = 0.0;
    for (double y : sample.y) {
        double term = y <= p.theta ? y / (2.0 * p.theta) : (1.0 - y) / (2.0 * (1.0 - p.theta));
        acc += term * term;
    }
    return std::sqrt(acc / static_cast<double>(sample.size()));
}

// ---------------------------------------------------------------------------
// Grid evaluation machinery.
//
// The log-likelihood over theta regroups into prefix sums of the sorted
// sample: with k = #{y_i <= theta},
//   log f(y, theta) = sum_{y_i <= theta} log(2 y_i)
//                   + sum_{y_i >  theta} log(2 - 2 y_i)
//                   - k log(theta) - (n - k) log(1 - theta),
// and likewise J(y, theta)^2 needs only prefix sums of y_i^2 and (1-y_i)^2.
// One merge sweep over the ascending grid then evaluates all cells in
// O(n log n + m) instead of O(n m).
// ---------------------------------------------------------------------------

/// Sorted-sample statistics consumed by the grid evaluators.
class SortedSample {
public:
    explicit SortedSample(const TriangularSample& sample) : sorted_(sample.y) {
        std::sort(sorted_.begin(), sorted_.end());
        const std::size_t n = sorted_.size();
        log_left_.assign(n + 1, 0.0);
        sq_left_.assign(n + 1, 0.0);
        log_right_.assign(n + 1, 0.0);
        sq_right_.assign(n + 1, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            log_left_[i + 1] = log_left_[i] + std::log(2.0 * sorted_[i]);
            sq_left_[i + 1] = sq_left_[i] + sorted_[i] * sorted_[i];
        }
        for (std::size_t i = n; i-- > 0;) {
            log_right_[i] = log_right_[i + 1] + std::log(2.0 - 2.0 * sorted_[i]);
            sq_right_[i] = sq_right_[i + 1] + (1.0 - sorted_[i]) * (1.0 - sorted_[i]);
        }
    }

    std::size_t size() const { return sorted_.size(); }
    double min() const { return sorted_.front(); }
    double max() const { return sorted_.back(); }
    const std::vector<double>& sorted() const { return sorted_; }

    // Log-likelihood pieces for a cell with k sample values at or below it.
    double log_lik(std::size_t k, double log_theta, double log_one_minus_theta) const {
        const auto n = static_cast<double>(sorted_.size());
        const auto kd = static_cast<double>(k);
        return log_left_[k] + log_right_[k] - kd * log_theta - (n - kd) * log_one_minus_theta;
    }

    double jacobian_sq(std::size_t k, double inv_4theta_sq, double inv_4omt_sq) const {
        const auto n = static_cast<double>(sorted_.size());
        return (sq_left_[k] * inv_4theta_sq + sq_right_[k] * inv_4omt_sq) / n;
    }

private:
    std::vector<double> sorted_;
    std::vector<double> log_left_;   // prefix sums of log(2 y)
    std::vector<double> sq_left_;    // prefix sums of y^2
    std::vector<double> log_right_;  // suffix sums of log(2 - 2y)
    std::vector<double> sq_right_;   // suffix sums of (1 - y)^2
};

/// Per-grid transcendental tables, built once and reused across replicates.
class ThetaTables {
public:
    explicit ThetaTables(const Grid& grid) : grid_(grid) {
        const std::size_t m = grid.size();
        log_theta_.resize(m);
        log_omt_.resize(m);
        inv_4theta_sq_.resize(m);
        inv_4omt_sq_.resize(m);
        jeffreys_.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            double t = grid.point(j);
            if (!(t > 0.0 && t < 1.0))
                throw OutOfDomainError("ThetaTables: grid must lie inside (0,1)");
            log_theta_[j] = std::log(t);
            log_omt_[j] = std::log1p(-t);
            inv_4theta_sq_[j] = 1.0 / (4.0 * t * t);
            inv_4omt_sq_[j] = 1.0 / (4.0 * (1.0 - t) * (1.0 - t));
            jeffreys_[j] = 1.0 / std::sqrt(t * (1.0 - t));
        }
    }

    const Grid& grid() const { return grid_; }
    double log_theta(std::size_t j) const { return log_theta_[j]; }
    double log_omt(std::size_t j) const { return log_omt_[j]; }
    double inv_4theta_sq(std::size_t j) const { return inv_4theta_sq_[j]; }
    double inv_4omt_sq(std::size_t j) const { return inv_4omt_sq_[j]; }
    double jeffreys(std::size_t j) const { return jeffreys_[j]; }

private:
    Grid grid_;
    std::vector<double> log_theta_, log_omt_;
    std::vector<double> inv_4theta_sq_, inv_4omt_sq_;
    std::vector<double> jeffreys_;
};

enum class Prior { Flat, Jeffreys };

namespace detail {

enum class GridWeight { Jacobian, Flat, Jeffreys };

inline GridDensity weighted_posterior(const SortedSample& ss, const ThetaTables& tables,
                                      GridWeight kind) {
    const Grid& grid = tables.grid();
    const std::size_t m = grid.size();
    const std::size_t n = ss.size();
    std::vector<double> values(m);

    // Pass 1: log-likelihood per cell via the merge sweep.
    double max_ll = -std::numeric_limits<double>::infinity();
    std::size_t k = 0;
    const auto& sorted = ss.sorted();
    for (std::size_t j = 0; j < m; ++j) {
        double t = grid.point(j);
        while (k < n && sorted[k] <= t) ++k;
        double ll = n > 0 ? ss.log_lik(k, tables.log_theta(j), tables.log_omt(j)) : 0.0;
        values[j] = ll;
        if (ll > max_ll) max_ll = ll;
    }
    if (!std::isfinite(max_ll)) throw AllZeroError("posterior: likelihood vanished everywhere");

    // Pass 2: exponentiate and apply the theta-dependent weight linearly
    // (the Jacobian is bounded by 1/2 and the Jeffreys factor by the grid
    // resolution, so no additional log-domain care is needed here).
    double total = 0.0;
    k = 0;
    for (std::size_t j = 0; j < m; ++j) {
        double t = grid.point(j);
        while (k < n && sorted[k] <= t) ++k;
        double w = std::exp(values[j] - max_ll);
        switch (kind) {
            case GridWeight::Jacobian:
                w *= n > 0 ? std::sqrt(ss.jacobian_sq(k, tables.inv_4theta_sq(j),
                                                      tables.inv_4omt_sq(j)))
                           : 1.0;
                break;
            case GridWeight::Flat:
                break;
            case GridWeight::Jeffreys:
                w *= tables.jeffreys(j);
                break;
        }
        values[j] = w;
        total += w;
    }
    if (!(total > 0.0)) throw AllZeroError("posterior: all weights underflowed");
    for (double& v : values) v /= total;
    return GridDensity(grid, std::move(values));
}

}  // namespace detail

/// Generalized fiducial distribution on the grid: density proportional to
/// the likelihood times the Jacobian function.
inline GridDensity gfd(const TriangularSample& sample, const ThetaTables& tables) {
    if (sample.size() == 0) throw Error("gfd: sample must be non-empty");
    return detail::weighted_posterior(SortedSample(sample), tables, detail::GridWeight::Jacobian);
}

inline GridDensity gfd(const TriangularSample& sample, const Grid& grid) {
    return gfd(sample, ThetaTables(grid));
}

/// Modified GFD: boundary atoms of mass min_i (1-y_i)^2 at 0 and
/// min_i y_i^2 at 1, with the remaining mass on the unmodified GFD.
inline MixedDensity modified_gfd(const TriangularSample& sample, const ThetaTables& tables) {
    if (sample.size() == 0) throw Error("modified_gfd: sample must be non-empty");
    SortedSample ss(sample);
    double mass_at_zero = (1.0 - ss.max()) * (1.0 - ss.max());
    double mass_at_one = ss.min() * ss.min();
    GridDensity cont =
        detail::weighted_posterior(ss, tables, detail::GridWeight::Jacobian);
    double cont_weight = 1.0 - mass_at_zero - mass_at_one;
    return MixedDensity(std::move(cont), cont_weight,
                        {{0.0, mass_at_zero}, {1.0, mass_at_one}});
}

inline MixedDensity modified_gfd(const TriangularSample& sample, const Grid& grid) {
    return modified_gfd(sample, ThetaTables(grid));
}

/// Bayesian posterior under a flat or Jeffreys prior. An empty sample is
/// allowed and returns the normalized prior itself.
inline GridDensity bayes_posterior(const TriangularSample& sample, Prior prior,
                                   const ThetaTables& tables) {
    return detail::weighted_posterior(
        SortedSample(sample), tables,
        prior == Prior::Flat ? detail::GridWeight::Flat : detail::GridWeight::Jeffreys);
}

inline GridDensity bayes_posterior(const TriangularSample& sample, Prior prior,
                                   const Grid& grid) {
    return bayes_posterior(sample, prior, ThetaTables(grid));
}

}  // namespace gfi::triangular
