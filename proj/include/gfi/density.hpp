#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "gfi/errors.hpp"
#include "gfi/grid.hpp"

namespace gfi {

/// Credible interval at a given level.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double level = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Probability distribution on a Grid: weights[i] is the mass of cell i.
///
/// Weights are nonnegative and sum to one (within 1e-12). The cumulative
/// array is precomputed so cdf/quantile lookups are O(log m).
class GridDensity {
public:
    GridDensity(Grid grid, std::vector<double> weights)
        : grid_(grid), weights_(std::move(weights)) {
        if (weights_.size() != grid_.size())
            throw Error("GridDensity: weight count does not match grid");
        double total = 0.0;
        for (double w : weights_) {
            if (!(w >= 0.0)) throw Error("GridDensity: negative or NaN weight");
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw Error("GridDensity: weights must sum to 1");
        cumulative_.resize(weights_.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            acc += weights_[i];
            cumulative_[i] = acc;
        }
        cumulative_.back() = total;  // guard against rounding past the total
    }

    const Grid& grid() const { return grid_; }
    const std::vector<double>& weights() const { return weights_; }

    double mean() const {
        double s = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) s += grid_.point(i) * weights_[i];
        return s;
    }

    /// Cumulative mass up to x, linear within a cell; cdf_at(hi) == total mass.
    double cdf_at(double x) const {
        if (x < grid_.lo() || x > grid_.hi())
            throw OutOfDomainError("cdf_at: point outside grid");
        if (x == grid_.hi()) return cumulative_.back();
        std::size_t i = grid_.cell_index(x);
        double before = i == 0 ? 0.0 : cumulative_[i - 1];
        double frac = (x - grid_.cell_left(i)) / grid_.spacing();
        return before + weights_[i] * frac;
    }

    /// Infimum x with cdf_at(x) >= q * total mass; inverse of cdf_at up to
    /// grid resolution.
    double quantile(double q) const {
        if (!(q >= 0.0 && q <= 1.0)) throw OutOfDomainError("quantile: q outside [0,1]");
        double target = q * cumulative_.back();
        if (target <= 0.0) return grid_.lo();
        auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), target);
        if (it == cumulative_.end()) return grid_.hi();
        std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
        double before = i == 0 ? 0.0 : cumulative_[i - 1];
        if (weights_[i] <= 0.0) return grid_.cell_left(i);
        double frac = (target - before) / weights_[i];
        return std::min(grid_.cell_left(i) + frac * grid_.spacing(), grid_.hi());
    }

    /// Inverse-CDF sample; deterministic given u.
    double sample(double u) const { return quantile(u); }

private:
    Grid grid_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
};

/// A grid density plus point masses (atoms); total mass is one.
///
/// The continuous component is stored normalized together with its overall
/// weight, so `continuous().weights()` always sums to one and the mass the
/// component carries is `continuous_weight()`.
class MixedDensity {
public:
    struct Atom {
        double location;
        double mass;
    };

    MixedDensity(GridDensity continuous, double continuous_weight, std::vector<Atom> atoms)
        : continuous_(std::move(continuous)),
          continuous_weight_(continuous_weight),
          atoms_(std::move(atoms)) {
        if (!(continuous_weight_ >= 0.0 && continuous_weight_ <= 1.0))
            throw Error("MixedDensity: continuous weight outside [0,1]");
        double total = continuous_weight_;
        for (const auto& a : atoms_) {
            if (!(a.mass >= 0.0)) throw Error("MixedDensity: negative atom mass");
            if (a.location < continuous_.grid().lo() || a.location > continuous_.grid().hi())
                throw Error("MixedDensity: atom outside grid domain");
            total += a.mass;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw Error("MixedDensity: masses must sum to 1");
        std::sort(atoms_.begin(), atoms_.end(),
                  [](const Atom& a, const Atom& b) { return a.location < b.location; });
    }

    const GridDensity& continuous() const { return continuous_; }
    double continuous_weight() const { return continuous_weight_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    /// CDF of the mixture; atoms at x count as mass at or below x.
    double cdf_at(double x) const {
        double c = continuous_weight_ * continuous_.cdf_at(x);
        for (const auto& a : atoms_)
            if (a.location <= x) c += a.mass;
        return c;
    }

    /// Infimum x with cdf_at(x) >= q; atoms absorb whole quantile ranges.
    double quantile(double q) const {
        if (!(q >= 0.0 && q <= 1.0)) throw OutOfDomainError("quantile: q outside [0,1]");
        const Grid& g = continuous_.grid();
        if (q <= 0.0) return g.lo();
        double acc = 0.0;
        double cont_before = 0.0;  // continuous CDF value consumed so far
        for (const auto& a : atoms_) {
            double cont_here = continuous_weight_ > 0.0 ? continuous_.cdf_at(a.location) : 0.0;
            double below = acc + continuous_weight_ * (cont_here - cont_before);
            if (below >= q) break;
            if (below + a.mass >= q) return a.location;
            acc = below + a.mass;
            cont_before = cont_here;
        }
        // Target lies inside the continuous component beyond `cont_before`.
        if (continuous_weight_ <= 0.0) return atoms_.empty() ? g.hi() : atoms_.back().location;
        double qc = cont_before + (q - acc) / continuous_weight_;
        return continuous_.quantile(std::min(qc, 1.0));
    }

    double sample(double u) const { return quantile(u); }

private:
    GridDensity continuous_;
    double continuous_weight_;
    std::vector<Atom> atoms_;
};

/// Normalize log-density values over a grid into a GridDensity.
///
/// Weights are proportional to exp(log_values - max) per cell (midpoint
/// rule; the constant cell width cancels in the normalization). Stable
/// under any constant shift of log_values.
inline GridDensity normalize(const Grid& grid, std::span<const double> log_values) {
    if (log_values.size() != grid.size())
        throw Error("normalize: value count does not match grid");
    double max_lv = -std::numeric_limits<double>::infinity();
    for (double lv : log_values) {
        if (std::isnan(lv)) throw Error("normalize: NaN log-value");
        max_lv = std::max(max_lv, lv);
    }
    if (!std::isfinite(max_lv))
        throw AllZeroError("normalize: all log-values are -inf");
    std::vector<double> w(log_values.size());
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = std::exp(log_values[i] - max_lv);
        total += w[i];
    }
    for (double& wi : w) wi /= total;
    return GridDensity(grid, std::move(w));
}

/// Total variation distance between two densities on the same grid, in the
/// integrated |p - q| convention: sum_i |a_i - b_i|, with range [0, 2].
/// (The event-supremum form of the distance is half this value.)
inline double tv_distance(const GridDensity& a, const GridDensity& b) {
    if (a.grid() != b.grid()) throw GridMismatchError("tv_distance: grids differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.weights().size(); ++i)
        s += std::abs(a.weights()[i] - b.weights()[i]);
    return s;
}

/// Total variation distance between two mixed densities sharing a grid,
/// same convention as above; atoms are matched by location.
inline double tv_distance(const MixedDensity& a, const MixedDensity& b) {
    if (a.continuous().grid() != b.continuous().grid())
        throw GridMismatchError("tv_distance: grids differ");
    double s = 0.0;
    const auto& wa = a.continuous().weights();
    const auto& wb = b.continuous().weights();
    for (std::size_t i = 0; i < wa.size(); ++i)
        s += std::abs(a.continuous_weight() * wa[i] - b.continuous_weight() * wb[i]);
    std::size_t ia = 0, ib = 0;
    const auto& aa = a.atoms();
    const auto& ab = b.atoms();
    while (ia < aa.size() || ib < ab.size()) {
        if (ib == ab.size() || (ia < aa.size() && aa[ia].location < ab[ib].location)) {
            s += aa[ia++].mass;
        } else if (ia == aa.size() || ab[ib].location < aa[ia].location) {
            s += ab[ib++].mass;
        } else {
            s += std::abs(aa[ia].mass - ab[ib].mass);
            ++ia;
            ++ib;
        }
    }
    return s;
}

/// View a MixedDensity as one density against a GridDensity (atoms kept as
/// atoms, the grid component compared cell by cell).
inline double tv_distance(const MixedDensity& a, const GridDensity& b) {
    if (a.continuous().grid() != b.grid())
        throw GridMismatchError("tv_distance: grids differ");
    double s = 0.0;
    const auto& wa = a.continuous().weights();
    for (std::size_t i = 0; i < wa.size(); ++i)
        s += std::abs(a.continuous_weight() * wa[i] - b.weights()[i]);
    for (const auto& atom : a.atoms()) s += atom.mass;
    return s;
}

inline Interval equal_tailed_interval(const GridDensity& d, double level) {
    if (!(level > 0.0 && level < 1.0))
        throw OutOfDomainError("equal_tailed_interval: level outside (0,1)");
    double alpha = (1.0 - level) / 2.0;
    return Interval{d.quantile(alpha), d.quantile(1.0 - alpha), level};
}

inline Interval equal_tailed_interval(const MixedDensity& d, double level) {
    if (!(level > 0.0 && level < 1.0))
        throw OutOfDomainError("equal_tailed_interval: level outside (0,1)");
    double alpha = (1.0 - level) / 2.0;
    return Interval{d.quantile(alpha), d.quantile(1.0 - alpha), level};
}

}  // namespace gfi
