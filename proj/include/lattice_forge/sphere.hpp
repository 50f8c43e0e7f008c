#pragma once

#include "lattice_forge/numtheory.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace lattice_forge {

/// {g^0, g^((n-1)/m), ..., g^((m-1)(n-1)/m)} mod n: the order-m subgroup of
/// (Z/nZ)^*. Throws AdmissibilityError unless m >= 1 and m | n - 1.
std::vector<std::uint64_t> sphere_index_set(std::size_t m, PrimeModulus n);

/// 2n points on S^(2m-1), stored as the columns of a 2m x 2n matrix
///   V = (1/sqrt(m)) [Re F, -Im F; Im F, Re F],  F_{k,j} = exp(2 pi i k j / n),
/// k ranging over the index set and j over 1..n.
struct SphericalFrame {
    Eigen::MatrixXd V;
    std::size_t m;
    PrimeModulus n;
    std::vector<std::uint64_t> index_set;
};

SphericalFrame sphere_frame(std::size_t m, PrimeModulus n);

struct CoherenceReport {
    double mu;
    double bound_t3; // sqrt(n) / m
    bool bound_holds;
};

/// Coherence from the character sums S_t = sum_{k in index set} exp(2 pi i k t / n):
/// mu = max_t max(|Re S_t|, |Im S_t|) / m over t = 1..n-1. O(n m).
CoherenceReport mutual_coherence(const SphericalFrame& frame);

/// Largest |v_i^T v_j| over distinct columns of any matrix. O(N^2 d).
double pairwise_coherence(const Eigen::MatrixXd& V);

struct Theorem4Bound {
    double value; // m^(-1/2) n^(1/6) (ln m)^(1/6), without the unknown constant
    bool applicable; // m <= n^(2/3)
};

/// Diagnostic only: the constant in front of the bound is not known.
Theorem4Bound coherence_bound_t4(std::size_t m, std::uint64_t n);

void write_frame_csv(std::ostream& out, const SphericalFrame& frame);

} // namespace lattice_forge
