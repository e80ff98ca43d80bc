#pragma once

#include <cstddef>
#include <stdexcept>

#include "gfi/errors.hpp"

namespace gfi {

/// Uniform grid of cell midpoints on a bounded interval.
///
/// The interval [lo, hi] is split into m cells of equal width; point(i) is
/// the midpoint of cell i, so no evaluation ever touches the endpoints.
/// Cell i covers [lo + i*spacing, lo + (i+1)*spacing).
class Grid {
public:
    Grid(double lo, double hi, std::size_t m) : lo_(lo), hi_(hi), m_(m) {
        if (!(lo < hi)) throw Error("Grid: lo must be < hi");
        if (m < 2) throw Error("Grid: need at least 2 cells");
        spacing_ = (hi - lo) / static_cast<double>(m);
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    std::size_t size() const { return m_; }
    double spacing() const { return spacing_; }

    double point(std::size_t i) const {
        return lo_ + (static_cast<double>(i) + 0.5) * spacing_;
    }
    double cell_left(std::size_t i) const {
        return lo_ + static_cast<double>(i) * spacing_;
    }

    // Index of the cell containing x; x must lie in [lo, hi].
    std::size_t cell_index(double x) const {
        if (x < lo_ || x > hi_) throw OutOfDomainError("Grid: point outside [lo, hi]");
        auto i = static_cast<std::size_t>((x - lo_) / spacing_);
        return i >= m_ ? m_ - 1 : i;
    }

    bool operator==(const Grid& other) const {
        return lo_ == other.lo_ && hi_ == other.hi_ && m_ == other.m_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

private:
    double lo_;
    double hi_;
    std::size_t m_;
    double spacing_;
};

}  // namespace gfi
