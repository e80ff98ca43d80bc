#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gfi/errors.hpp"
#include "gfi/rng.hpp"
#include "gfi/spline.hpp"

namespace gfi::spline {

/// Output of the fiducial Markov chain. Draws are flattened as
/// (alpha_0..alpha_{p+kappa}, t_1..t_kappa, sigma); log_densities holds the
/// unnormalized log fiducial target at each retained draw, reproducible
/// bit-for-bit by log_fiducial_target on the unpacked state.
struct FiducialChain {
    int p = 1;
    int kappa = 1;
    std::vector<Eigen::VectorXd> draws;
    std::vector<double> log_densities;
    double acceptance_rate = 0.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return draws.size(); }
    double alpha(std::size_t i, int j) const { return draws[i](j); }
    double knot(std::size_t i, int k) const { return draws[i](p + kappa + 1 + k); }
    double sigma(std::size_t i) const { return draws[i](p + 2 * kappa + 1); }

    /// Rebuild the model at draw i (shares the template's domain constants).
    SplineModel model_at(std::size_t i, const SplineModel& like) const {
        SplineModel m = like;
        m.alpha = draws[i].head(p + kappa + 1);
        m.knots.assign(kappa, 0.0);
        for (int k = 0; k < kappa; ++k) m.knots[static_cast<std::size_t>(k)] = knot(i, k);
        m.sigma = sigma(i);
        return m;
    }

    std::vector<double> knot_series(int k) const {
        std::vector<double> out(draws.size());
        for (std::size_t i = 0; i < draws.size(); ++i) out[i] = knot(i, k);
        return out;
    }
};

namespace detail {

inline bool knots_admissible(const std::vector<double>& t, const SplineModel& m) {
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] < m.domain_lo + m.delta || t[k] > m.domain_hi - m.delta) return false;
        if (k > 0 && !(t[k] - t[k - 1] > m.delta)) return false;
    }
    return true;
}

inline bool alpha_admissible(const Eigen::VectorXd& a, const SplineModel& m) {
    for (int k = 1; k <= m.kappa(); ++k)
        if (!(std::abs(a(m.p + k)) > m.xi)) return false;
    return true;
}

}  // namespace detail

/// Random-walk Metropolis sampler for the spline fiducial distribution,
/// with stationary density proportional to exp(log_likelihood) * jacobian
/// over (t, alpha, sigma).
///
/// Each sweep proposes three blocks in order: knots, coefficients, and
/// sigma on the log scale. Proposals that leave the admissible region
/// (knot spacing below delta, truncated coefficients within xi of zero)
/// are rejected outright, which leaves the target untouched on the
/// admissible set. The first 20% of sweeps are discarded as warm-up, during
/// which the three proposal scales adapt toward 20-40% acceptance; the
/// scales are frozen afterwards. Deterministic given the seed.
inline FiducialChain sample_gfd(const SplineData& data, const SplineModel& init, int steps,
                                std::uint64_t seed) {
    init.validate();
    if (steps < 1) throw Error("sample_gfd: steps must be >= 1");
    if (data.size() != data.y.size() || data.size() < static_cast<std::size_t>(init.p + init.kappa() + 2))
        throw InitInvalidError("sample_gfd: too few observations for the model");

    const std::size_t n = data.size();
    SplineModel m = init;
    double rss = residual_sum_squares(data, m);
    double log_det = log_design_det(data, m);
    double target = log_likelihood_from_rss(rss, m.sigma, n) + log_jacobian_from_det(m, log_det);
    if (!std::isfinite(target))
        throw InitInvalidError("sample_gfd: fiducial target is degenerate at the initial state");

    Rng rng(StreamKey(seed).fold(0x73706c6e63686eULL).value());

    const int warmup = steps / 5;
    const double span = m.domain_hi - m.domain_lo;
    double scale_t = 0.05 * span;
    double scale_a = 0.25;
    double scale_s = 0.25;

    FiducialChain chain;
    chain.p = m.p;
    chain.kappa = m.kappa();
    chain.seed = seed;
    chain.draws.reserve(static_cast<std::size_t>(std::max(0, steps - warmup)));
    chain.log_densities.reserve(chain.draws.capacity());

    long accepted_post = 0;
    long window_acc[3] = {0, 0, 0};
    int window_len = 0;
    constexpr int kWindow = 50;
    constexpr double kTargetAcc = 0.3;

    std::vector<double> knot_prop(m.knots.size());
    for (int sweep = 0; sweep < steps; ++sweep) {
        const bool in_warmup = sweep < warmup;

        // Knot block.
        for (std::size_t k = 0; k < m.knots.size(); ++k)
            knot_prop[k] = m.knots[k] + scale_t * rng.normal();
        if (detail::knots_admissible(knot_prop, m)) {
            SplineModel cand = m;
            cand.knots = knot_prop;
            double rss2 = residual_sum_squares(data, cand);
            double det2 = log_design_det(data, cand);
            double target2 =
                log_likelihood_from_rss(rss2, cand.sigma, n) + log_jacobian_from_det(cand, det2);
            if (std::isfinite(target2) &&
                std::log(rng.uniform_open01()) < target2 - target) {
                m.knots = cand.knots;
                rss = rss2;
                log_det = det2;
                target = target2;
                window_acc[0]++;
                if (!in_warmup) accepted_post++;
            }
        }

        // Coefficient block.
        {
            Eigen::VectorXd a2 = m.alpha;
            for (Eigen::Index j = 0; j < a2.size(); ++j) a2(j) += scale_a * rng.normal();
            if (detail::alpha_admissible(a2, m)) {
                SplineModel cand = m;
                cand.alpha = a2;
                double rss2 = residual_sum_squares(data, cand);
                double target2 = log_likelihood_from_rss(rss2, cand.sigma, n) +
                                 log_jacobian_from_det(cand, log_det);
                if (std::isfinite(target2) &&
                    std::log(rng.uniform_open01()) < target2 - target) {
                    m.alpha = a2;
                    rss = rss2;
                    target = target2;
                    window_acc[1]++;
                    if (!in_warmup) accepted_post++;
                }
            }
        }

        // Sigma block, random walk in log sigma. The proposal Jacobian
        // contributes log(sigma'/sigma) to the acceptance ratio.
        {
            double sigma2 = m.sigma * std::exp(scale_s * rng.normal());
            SplineModel cand = m;
            cand.sigma = sigma2;
            double target2 = log_likelihood_from_rss(rss, sigma2, n) +
                             log_jacobian_from_det(cand, log_det);
            double log_ratio = (target2 + std::log(sigma2)) - (target + std::log(m.sigma));
            if (std::isfinite(target2) && std::log(rng.uniform_open01()) < log_ratio) {
                m.sigma = sigma2;
                target = target2;
                window_acc[2]++;
                if (!in_warmup) accepted_post++;
            }
        }

        if (in_warmup) {
            if (++window_len == kWindow) {
                auto tune = [](double scale, long acc) {
                    double rate = static_cast<double>(acc) / kWindow;
                    double factor = std::exp(rate - kTargetAcc);
                    return std::clamp(scale * factor, 1e-8, 1e3);
                };
                scale_t = tune(scale_t, window_acc[0]);
                scale_a = tune(scale_a, window_acc[1]);
                scale_s = tune(scale_s, window_acc[2]);
                window_acc[0] = window_acc[1] = window_acc[2] = 0;
                window_len = 0;
            }
        } else {
            Eigen::VectorXd v(m.n_params());
            v.head(m.n_coef()) = m.alpha;
            for (int k = 0; k < m.kappa(); ++k)
                v(m.n_coef() + k) = m.knots[static_cast<std::size_t>(k)];
            v(m.n_params() - 1) = m.sigma;
            chain.draws.push_back(std::move(v));
            chain.log_densities.push_back(target);
        }
    }

    const long post_proposals = 3L * std::max(1, steps - warmup);
    double rate = static_cast<double>(accepted_post) / static_cast<double>(post_proposals);
    chain.acceptance_rate = std::clamp(rate, 1e-12, 1.0 - 1e-12);
    return chain;
}

}  // namespace gfi::spline
