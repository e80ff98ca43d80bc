#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>
#include <vector>

#include "gfi/density.hpp"
#include "gfi/errors.hpp"
#include "gfi/grid.hpp"

namespace gfi::bvm {

/// Local reparameterization h = sqrt(n) (theta - theta0).
struct LocalScale {
    Eigen::VectorXd theta0;
    std::size_t n = 1;

    LocalScale(Eigen::VectorXd t0, std::size_t n_obs) : theta0(std::move(t0)), n(n_obs) {
        if (n < 1) throw Error("LocalScale: n must be >= 1");
    }
};

inline Eigen::VectorXd to_local(const Eigen::VectorXd& theta, const LocalScale& s) {
    return std::sqrt(static_cast<double>(s.n)) * (theta - s.theta0);
}

inline Eigen::VectorXd from_local(const Eigen::VectorXd& h, const LocalScale& s) {
    return s.theta0 + h / std::sqrt(static_cast<double>(s.n));
}

/// Center sqrt(n)^-1 sum_i I^-1 score(y_i) of the limiting Gaussian.
inline Eigen::VectorXd delta_n(const Eigen::MatrixXd& scores, const Eigen::MatrixXd& info) {
    if (info.rows() != info.cols() || info.rows() != scores.cols())
        throw Error("delta_n: dimension mismatch");
    Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
        throw SingularInformationError("delta_n: information matrix not SPD");
    Eigen::VectorXd total = scores.colwise().sum();
    return ldlt.solve(total) / std::sqrt(static_cast<double>(scores.rows()));
}

/// The limiting Gaussian N(Delta, I^-1) in the local parameter, together
/// with the anchoring (theta0, n) needed to express it on the original scale.
struct GaussianLimit {
    Eigen::VectorXd center;      // Delta
    Eigen::MatrixXd covariance;  // I^-1
    Eigen::VectorXd theta0;
    std::size_t n = 1;

    GaussianLimit(Eigen::VectorXd delta, Eigen::MatrixXd cov, Eigen::VectorXd t0,
                  std::size_t n_obs)
        : center(std::move(delta)), covariance(std::move(cov)), theta0(std::move(t0)), n(n_obs) {
        if (n < 1) throw Error("GaussianLimit: n must be >= 1");
        if (covariance.rows() != covariance.cols() || covariance.rows() != center.size() ||
            theta0.size() != center.size())
            throw Error("GaussianLimit: dimension mismatch");
        Eigen::LDLT<Eigen::MatrixXd> ldlt(covariance);
        if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
            throw Error("GaussianLimit: covariance must be SPD");
    }

    std::size_t dim() const { return static_cast<std::size_t>(center.size()); }
};

enum class Scale { Local, Original };

namespace detail {

inline std::pair<double, double> mean_sd(const GaussianLimit& lim, Scale scale) {
    if (lim.dim() != 1)
        throw DimensionUnsupportedError("gaussian grid: only 1-d supported");
    double sd_local = std::sqrt(lim.covariance(0, 0));
    if (scale == Scale::Local) return {lim.center(0), sd_local};
    double root_n = std::sqrt(static_cast<double>(lim.n));
    return {lim.theta0(0) + lim.center(0) / root_n, sd_local / root_n};
}

}  // namespace detail

/// The limiting Gaussian discretized on a grid (renormalized after
/// truncation). On the original scale the affine map theta = theta0 +
/// h/sqrt(n) carries the mean to theta0 + Delta/sqrt(n) and the variance to
/// I^-1/n.
inline GridDensity gaussian_on_grid(const GaussianLimit& lim, const Grid& grid, Scale scale) {
    auto [mu, sd] = detail::mean_sd(lim, scale);
    std::vector<double> log_values(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double z = (grid.point(j) - mu) / sd;
        log_values[j] = -0.5 * z * z;
    }
    return normalize(grid, log_values);
}

/// Mass the Gaussian places outside the grid (before renormalization).
inline double gaussian_truncation_mass(const GaussianLimit& lim, const Grid& grid, Scale scale) {
    auto [mu, sd] = detail::mean_sd(lim, scale);
    auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    double inside = phi((grid.hi() - mu) / sd) - phi((grid.lo() - mu) / sd);
    return 1.0 - inside;
}

/// Total variation distance between a grid-computed fiducial density and
/// its Gaussian limit rendered on the same grid (original scale).
inline double bvm_tv(const GridDensity& fiducial, const GaussianLimit& lim) {
    return tv_distance(fiducial, gaussian_on_grid(lim, fiducial.grid(), Scale::Original));
}

}  // namespace gfi::bvm
