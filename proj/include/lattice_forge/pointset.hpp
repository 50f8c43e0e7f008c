#pragma once

#include "lattice_forge/generating_vector.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace lattice_forge {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// n points in [0,1)^d, one per row. Rows are contiguous so a point can be
/// handed out as a span.
struct LatticePointSet {
    RowMatrix points;
    std::optional<GeneratingVector> generator; // empty for Monte Carlo points
    std::optional<std::vector<double>> shift;
    std::optional<std::uint64_t> seed;

    std::size_t size() const { return static_cast<std::size_t>(points.rows()); }
    std::size_t dimension() const { return static_cast<std::size_t>(points.cols()); }
    std::span<const double> point(std::size_t i) const
    {
        return {points.data() + i * dimension(), dimension()};
    }
    bool is_unshifted_lattice() const { return generator.has_value() && !shift.has_value(); }
};

/// Row i, column j is (i * z_j mod n) / n; row 0 is the origin.
LatticePointSet generate(const GeneratingVector& z);

/// Adds delta to every point and keeps the fractional part.
LatticePointSet shift_by(const LatticePointSet& ps, std::span<const double> delta);

/// Draws delta ~ U[0,1)^d from the seeded generator and applies shift_by.
LatticePointSet random_shift(const LatticePointSet& ps, std::uint64_t seed);

/// n i.i.d. U[0,1)^d points.
LatticePointSet mc_points(std::size_t n, std::size_t d, std::uint64_t seed);

void write_points_csv(std::ostream& out, const LatticePointSet& ps);

} // namespace lattice_forge
