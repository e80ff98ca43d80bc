#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "gfi/errors.hpp"

namespace gfi {

/// Determinant-like operator for the l2 norm: D(M) = det(n^-1 M^T M)^(1/2)
/// for an n x k matrix M. Computed through a column-pivoted QR so the result
/// is the product of |R_ii| scaled by n^(-k/2). Rank-deficient input yields 0.
inline double d_operator(const Eigen::MatrixXd& m) {
    const auto n = m.rows();
    const auto k = m.cols();
    if (n < k) return 0.0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    if (qr.rank() < k) return 0.0;
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < k; ++i)
        log_det += std::log(std::abs(qr.matrixR()(i, i)));
    log_det -= 0.5 * static_cast<double>(k) * std::log(static_cast<double>(n));
    return std::exp(log_det);
}

/// Log of d_operator, or -inf when the matrix is rank deficient.
inline double log_d_operator(const Eigen::MatrixXd& m) {
    const auto n = m.rows();
    const auto k = m.cols();
    if (n < k) return -std::numeric_limits<double>::infinity();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    if (qr.rank() < k) return -std::numeric_limits<double>::infinity();
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < k; ++i)
        log_det += std::log(std::abs(qr.matrixR()(i, i)));
    return log_det - 0.5 * static_cast<double>(k) * std::log(static_cast<double>(n));
}

/// Jacobian function of the Gaussian linear model y = X beta + sigma U:
/// n^-1 sigma^-1 det((X, y - X beta)^T (X, y - X beta))^(1/2), which reduces
/// to n^-1 sigma^-1 det(X^T X)^(1/2) RSS^(1/2) and does not depend on beta.
/// The beta argument is accepted so the invariance can be asserted directly.
inline double linreg_jacobian(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                              const Eigen::VectorXd& beta, double sigma) {
    const auto n = x.rows();
    const auto k = x.cols();
    if (n <= k) throw Error("linreg_jacobian: need n > k");
    if (!(sigma > 0.0)) throw Error("linreg_jacobian: sigma must be positive");
    if (y.size() != n || beta.size() != k)
        throw Error("linreg_jacobian: dimension mismatch");
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    if (qr.rank() < k) throw SingularDesignError("linreg_jacobian: X^T X is singular");

    Eigen::MatrixXd m(n, k + 1);
    m.leftCols(k) = x;
    m.col(k) = y - x * beta;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qrm(m);
    if (qrm.rank() < k + 1) return 0.0;  // perfect fit: RSS = 0
    double det = 1.0;
    for (Eigen::Index i = 0; i < k + 1; ++i)
        det *= std::abs(qrm.matrixR()(i, i));
    return det / (sigma * static_cast<double>(n));
}

}  // namespace gfi
