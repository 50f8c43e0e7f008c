#pragma once

#include "lattice_forge/generating_vector.hpp"
#include "lattice_forge/pointset.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lattice_forge {

/// Exponent p of the l_p toroidal distance.
enum class Norm { l1 = 1, l2 = 2 };

std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view text);

double toroidal_distance(std::span<const double> x, std::span<const double> y, Norm norm);

// Distances of a rank-1 lattice are compared on exact integer keys:
// with m_{k,j} = min(k z_j mod n, n - k z_j mod n),
//   l1 key = sum_j m_{k,j}      distance = key / n
//   l2 key = sum_j m_{k,j}^2    distance = sqrt(key) / n
double key_to_distance(std::uint64_t key, std::uint64_t n, Norm norm);

struct CensusEntry {
    std::uint64_t key;
    double distance;
    std::uint64_t multiplicity; // number of k in [1, n-1] with this key
};

struct DistanceReport {
    Norm norm;
    std::uint64_t min_key = 0;
    double min_distance = 0.0;
    std::uint64_t argmin_k = 0; // smallest k attaining the minimum
    std::vector<CensusEntry> census; // ascending by key

    std::size_t distinct_count() const { return census.size(); }
};

/// Minimum toroidal distance and full distance census in O(nd).
DistanceReport lattice_min_distance(const GeneratingVector& z, Norm norm);

/// Minimum key only. Scanning stops early once the running minimum drops
/// strictly below `stop_below`; the returned value is then some key < stop_below.
std::uint64_t lattice_min_key(const GeneratingVector& z, Norm norm, std::uint64_t stop_below = 0);

struct TheoremBounds {
    double l1_lower;
    double l1_upper;
    double l2_lower;
    double l2_upper;
};

/// Bounds on the minimum pairwise toroidal distance of a lattice with
/// pairwise-distinct components. Throws AdmissibilityError if n < 2d + 1.
TheoremBounds theorem2_bounds(std::size_t d, PrimeModulus n);

struct BoundCheck {
    bool lower;
    bool upper;
    bool both() const { return lower && upper; }
};

/// Compares a minimum key against the bounds in integer arithmetic:
///   l1: d(d+1) <= 2 key,  4 key <= (n+1) d
///   l2: d(d+1)(2d+1) <= 6 key,  12 key <= (n+1) d n
BoundCheck check_bounds_exact(std::uint64_t min_key, std::size_t d, std::uint64_t n, Norm norm);

struct Corollary1Values {
    double l1;
    double l2;
    PrimeModulus n;
};

/// Constant pairwise distances of the subgroup lattice with n = 2d + 1.
/// Throws AdmissibilityError if 2d + 1 is composite.
Corollary1Values corollary1_values(std::size_t d);

/// O(n^2 d) pairwise scan. Refuses (PreconditionError) above 10^4 points.
double brute_force_min_distance(const LatticePointSet& points, Norm norm);

inline constexpr std::size_t brute_force_point_limit = 10'000;

} // namespace lattice_forge
