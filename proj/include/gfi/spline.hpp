#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "gfi/d_operator.hpp"
#include "gfi/errors.hpp"
#include "gfi/rng.hpp"

namespace gfi::spline {

// (u)_+^e with the truncation applied before exponentiation. The e = 0 case
// follows the right-continuous step convention: 0 for u <= 0, 1 for u > 0.
inline double trunc_pow(double u, int e) {
    if (u <= 0.0) return 0.0;
    if (e == 0) return 1.0;
    double r = u;
    for (int i = 1; i < e; ++i) r *= u;
    return r;
}

/// Free-knot spline model of degree p with kappa interior knots on [a, b]:
/// g(x) = sum_j alpha_j x^j + sum_k alpha_{p+k} (x - t_k)_+^p, Gaussian noise
/// of scale sigma. `delta` is the minimum knot separation and boundary
/// margin, `xi` the lower bound on the truncated-term coefficients.
struct SplineModel {
    int p = 1;
    std::vector<double> knots;
    Eigen::VectorXd alpha;
    double sigma = 1.0;
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    double delta = 0.05;
    double xi = 1e-3;

    int kappa() const { return static_cast<int>(knots.size()); }
    int n_coef() const { return p + kappa() + 1; }
    int n_params() const { return p + 2 * kappa() + 2; }  // alpha, t, sigma^2

    /// Throws InitInvalidError when any model constraint fails.
    void validate() const {
        if (p < 1) throw InitInvalidError("SplineModel: degree must be >= 1");
        if (knots.empty()) throw InitInvalidError("SplineModel: need at least one knot");
        if (!(sigma > 0.0)) throw InitInvalidError("SplineModel: sigma must be positive");
        if (!(domain_lo < domain_hi)) throw InitInvalidError("SplineModel: empty domain");
        if (!(delta > 0.0) || !(xi > 0.0))
            throw InitInvalidError("SplineModel: delta and xi must be positive");
        if (alpha.size() != n_coef())
            throw InitInvalidError("SplineModel: coefficient count must be p + kappa + 1");
        for (std::size_t k = 0; k < knots.size(); ++k) {
            if (knots[k] < domain_lo + delta || knots[k] > domain_hi - delta)
                throw InitInvalidError("SplineModel: knot outside [a+delta, b-delta]");
            if (k > 0 && !(knots[k] - knots[k - 1] > delta))
                throw InitInvalidError("SplineModel: knots closer than delta");
        }
        for (int k = 1; k <= kappa(); ++k)
            if (!(std::abs(alpha(p + k)) > xi))
                throw InitInvalidError("SplineModel: truncated coefficient within xi of 0");
    }

    bool admissible() const {
        try {
            validate();
            return true;
        } catch (const InitInvalidError&) {
            return false;
        }
    }
};

struct SplineData {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return x.size(); }
};

/// Truncated-power basis at x: (1, x, ..., x^p, (x-t_1)_+^p, ..., (x-t_k)_+^p).
inline Eigen::VectorXd basis(double x, std::span<const double> knots, int p) {
    Eigen::VectorXd b(p + static_cast<int>(knots.size()) + 1);
    b(0) = 1.0;
    for (int j = 1; j <= p; ++j) b(j) = b(j - 1) * x;
    for (std::size_t k = 0; k < knots.size(); ++k)
        b(p + 1 + static_cast<int>(k)) = trunc_pow(x - knots[k], p);
    return b;
}

/// Spline value g(x | alpha, t).
inline double value(const SplineModel& m, double x) {
    double acc = m.alpha(0);
    double xp = 1.0;
    for (int j = 1; j <= m.p; ++j) {
        xp *= x;
        acc += m.alpha(j) * xp;
    }
    for (int k = 0; k < m.kappa(); ++k)
        acc += m.alpha(m.p + 1 + k) * trunc_pow(x - m.knots[k], m.p);
    return acc;
}

struct DesignMatrices {
    Eigen::MatrixXd b_alpha;        // n x (p + kappa + 1), rows basis(x_i)
    Eigen::MatrixXd b_t;            // n x kappa, entries (x_i - t_k)_+^(p-1)
    Eigen::VectorXd b_sigma_tilde;  // y verbatim
};

/// The three design blocks entering the Jacobian. The scalar factors
/// p * alpha_{p+k} of the knot derivatives and 1/sigma of the sigma
/// derivative are carried in the Jacobian prefactor, not in the columns.
inline DesignMatrices design_matrices(const SplineData& data, const SplineModel& m) {
    const auto n = static_cast<Eigen::Index>(data.size());
    DesignMatrices out;
    out.b_alpha.resize(n, m.n_coef());
    out.b_t.resize(n, m.kappa());
    out.b_sigma_tilde.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double x = data.x[static_cast<std::size_t>(i)];
        out.b_alpha(i, 0) = 1.0;
        for (int j = 1; j <= m.p; ++j) out.b_alpha(i, j) = out.b_alpha(i, j - 1) * x;
        for (int k = 0; k < m.kappa(); ++k) {
            out.b_alpha(i, m.p + 1 + k) = trunc_pow(x - m.knots[k], m.p);
            out.b_t(i, k) = trunc_pow(x - m.knots[k], m.p - 1);
        }
        out.b_sigma_tilde(i) = data.y[static_cast<std::size_t>(i)];
    }
    return out;
}

/// Residual sum of squares of the spline fit; the canonical accumulation
/// order (ascending i) is relied upon for reproducible chain densities.
inline double residual_sum_squares(const SplineData& data, const SplineModel& m) {
    double rss = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        double r = data.y[i] - value(m, data.x[i]);
        rss += r * r;
    }
    return rss;
}

inline double log_likelihood_from_rss(double rss, double sigma, std::size_t n) {
    constexpr double log_two_pi = 1.8378770664093454836;
    return -0.5 * static_cast<double>(n) * (log_two_pi + 2.0 * std::log(sigma)) -
           rss / (2.0 * sigma * sigma);
}

/// Gaussian log-likelihood of the data under the model.
inline double log_likelihood(const SplineData& data, const SplineModel& m) {
    return log_likelihood_from_rss(residual_sum_squares(data, m), m.sigma, data.size());
}

/// log of det(n^-1 A~^T A~)^(1/2) for A~ = [B_alpha, B_t, y]; -inf when the
/// stacked design is rank deficient. Depends on the knots but not on alpha
/// or sigma, which the sampler exploits by caching it between knot moves.
inline double log_design_det(const SplineData& data, const SplineModel& m) {
    const auto n = static_cast<Eigen::Index>(data.size());
    DesignMatrices d = design_matrices(data, m);
    Eigen::MatrixXd stacked(n, m.n_coef() + m.kappa() + 1);
    stacked.leftCols(m.n_coef()) = d.b_alpha;
    stacked.middleCols(m.n_coef(), m.kappa()) = d.b_t;
    stacked.rightCols(1) = d.b_sigma_tilde;
    return log_d_operator(stacked);
}

inline double log_jacobian_from_det(const SplineModel& m, double log_det) {
    double acc = static_cast<double>(m.kappa()) * std::log(static_cast<double>(m.p));
    for (int k = 1; k <= m.kappa(); ++k) acc += std::log(std::abs(m.alpha(m.p + k)));
    return acc - std::log(m.sigma) + log_det;
}

inline double log_jacobian(const SplineData& data, const SplineModel& m) {
    return log_jacobian_from_det(m, log_design_det(data, m));
}

/// Jacobian function p^kappa / sigma * prod_k |alpha_{p+k}| *
/// det(n^-1 A~^T A~)^(1/2); returns 0 for a rank-deficient design.
inline double jacobian(const SplineData& data, const SplineModel& m) {
    if (data.size() < static_cast<std::size_t>(m.p + m.kappa() + 2))
        throw Error("jacobian: need at least p + kappa + 2 observations");
    double lj = log_jacobian(data, m);
    return std::isfinite(lj) ? std::exp(lj) : 0.0;
}

/// Unnormalized log fiducial density: log-likelihood plus log-Jacobian.
inline double log_fiducial_target(const SplineData& data, const SplineModel& m) {
    return log_likelihood(data, m) + log_jacobian(data, m);
}

/// Fisher information in the (alpha, t, sigma^2) coordinates, conditional
/// on the design points x. Block diagonal: sigma^-2 X^T X for (alpha, t)
/// with X = [basis columns | -p alpha_{p+k} (x - t_k)_+^(p-1)], and
/// n/(2 sigma^4) for sigma^2.
inline Eigen::MatrixXd fisher_info(const SplineModel& m, std::span<const double> x) {
    if (m.p < 1 || m.alpha.size() != m.n_coef() || !(m.sigma > 0.0))
        throw InitInvalidError("fisher_info: malformed model");
    for (int k = 1; k <= m.kappa(); ++k)
        if (!(std::abs(m.alpha(m.p + k)) > m.xi))
            throw InitInvalidError("fisher_info: truncated coefficient within xi of 0");
    const auto n = static_cast<Eigen::Index>(x.size());
    const int d_eta = m.n_coef() + m.kappa();
    Eigen::MatrixXd design(n, d_eta);
    for (Eigen::Index i = 0; i < n; ++i) {
        double xi_pt = x[static_cast<std::size_t>(i)];
        design(i, 0) = 1.0;
        for (int j = 1; j <= m.p; ++j) design(i, j) = design(i, j - 1) * xi_pt;
        for (int k = 0; k < m.kappa(); ++k) {
            design(i, m.p + 1 + k) = trunc_pow(xi_pt - m.knots[k], m.p);
            design(i, m.n_coef() + k) = -static_cast<double>(m.p) * m.alpha(m.p + 1 + k) *
                                        trunc_pow(xi_pt - m.knots[k], m.p - 1);
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < d_eta)
        throw SingularInformationError("fisher_info: design columns linearly dependent");
    Eigen::MatrixXd info = Eigen::MatrixXd::Zero(d_eta + 1, d_eta + 1);
    info.topLeftCorner(d_eta, d_eta) = design.transpose() * design / (m.sigma * m.sigma);
    info(d_eta, d_eta) =
        static_cast<double>(n) / (2.0 * std::pow(m.sigma, 4));
    return info;
}

/// Deterministic artificial design whose Jacobian is bounded away from 0:
/// p + 1 points in the first inter-knot segment (pinning the polynomial
/// part), two in every other segment, one extra in the widest segment, all
/// separated by more than delta/2, with responses spread over [-q, q].
inline SplineData artificial_design(const SplineModel& m, double q) {
    m.validate();
    if (!(q > 0.0)) throw Error("artificial_design: q must be positive");
    const int kappa = m.kappa();
    std::vector<double> bounds;
    bounds.push_back(m.domain_lo);
    bounds.insert(bounds.end(), m.knots.begin(), m.knots.end());
    bounds.push_back(m.domain_hi);

    std::vector<int> counts(static_cast<std::size_t>(kappa) + 1, 2);
    counts[0] = m.p + 1;
    std::size_t widest = 0;
    for (std::size_t s = 1; s + 1 < bounds.size(); ++s)
        if (bounds[s + 1] - bounds[s] > bounds[widest + 1] - bounds[widest]) widest = s;
    counts[widest] += 1;

    SplineData data;
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
        double len = bounds[s + 1] - bounds[s];
        double gap = len / static_cast<double>(counts[s] + 1);
        if (!(gap > m.delta / 2.0))
            throw InfeasibleGeometryError(
                "artificial_design: segment cannot host points separated by delta/2");
        for (int i = 1; i <= counts[s]; ++i)
            data.x.push_back(bounds[s] + static_cast<double>(i) * gap);
    }

    // Arbitrary but fixed generic responses in [-q, q].
    Rng rng(StreamKey(0x61727447726964ULL).fold(static_cast<int>(data.x.size())).value());
    data.y.resize(data.x.size());
    for (auto& v : data.y) v = q * (2.0 * rng.uniform_open01() - 1.0);
    return data;
}

inline double artificial_design_jacobian(const SplineModel& m, double q) {
    return jacobian(artificial_design(m, q), m);
}

/// Data simulator: uniform design on [a, b], Gaussian noise.
inline SplineData simulate(const SplineModel& truth, std::size_t n, Rng& rng) {
    SplineData data;
    data.x.resize(n);
    data.y.resize(n);
    double a = truth.domain_lo, b = truth.domain_hi;
    for (std::size_t i = 0; i < n; ++i)
        data.x[i] = a + (b - a) * rng.uniform_open01();
    for (std::size_t i = 0; i < n; ++i)
        data.y[i] = value(truth, data.x[i]) + truth.sigma * rng.normal();
    return data;
}

}  // namespace gfi::spline
