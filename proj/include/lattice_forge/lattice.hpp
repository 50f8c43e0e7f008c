#pragma once

#include "lattice_forge/generating_vector.hpp"
#include "lattice_forge/metrics.hpp"

#include <cstdint>
#include <vector>

namespace lattice_forge {

/// True iff n is prime, n >= 2d + 1 and 2d divides n - 1.
bool is_admissible(std::size_t d, std::uint64_t n);

/// z_k = g^((k-1)(n-1)/(2d)) mod n with g the smallest primitive root.
/// {z, -z} mod n is then the order-2d subgroup of (Z/nZ)^*.
/// Throws AdmissibilityError unless n >= 2d + 1 and 2d | n - 1.
GeneratingVector subgroup_generating_vector(std::size_t d, PrimeModulus n);

/// Same, but checks the divisibility conditions before primality so that a
/// composite n that also fails 2d | n - 1 reports the divisibility failure.
/// A composite n is an AdmissibilityError here too.
GeneratingVector subgroup_generating_vector(std::size_t d, std::uint64_t n);

/// [1, alpha, alpha^2, ..., alpha^(d-1)] mod n.
GeneratingVector korobov_vector(std::uint64_t alpha, std::size_t d, PrimeModulus n);

struct SearchResult {
    GeneratingVector vector;
    double score;
    std::uint64_t multiplier;
    std::uint64_t candidates_evaluated;
};

/// Exhaustive search over alpha in [1, n-1] for the Korobov vector with the
/// largest minimum toroidal distance. Ties go to the smallest alpha. Work is
/// split across worker_count() threads; the answer does not depend on it.
SearchResult korobov_search(std::size_t d, PrimeModulus n, Norm norm);

/// The first `count` primes n >= max(start, 2d + 1) with 2d | n - 1.
std::vector<PrimeModulus> find_admissible_n(std::size_t d, std::size_t count, std::uint64_t start = 2);

/// True iff two components are equal.
bool is_degenerate(const GeneratingVector& z);

/// True iff z_i + z_j = n for some i != j, i.e. two coordinates of every
/// lattice point share the same toroidal offset.
bool has_antipodal_pair(const GeneratingVector& z);

} // namespace lattice_forge
