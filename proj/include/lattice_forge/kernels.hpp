#pragma once

#include "lattice_forge/pointset.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <string_view>

namespace lattice_forge {

enum class KernelFamily { gaussian, arccos0, arccos1 };

std::string_view to_string(KernelFamily family);
KernelFamily parse_kernel_family(std::string_view text);

struct KernelSpec {
    KernelFamily family = KernelFamily::gaussian;
    double sigma = 15.0; // gaussian bandwidth: exp(-|x-y|^2 / (2 sigma^2))

    /// Throws DomainError for a non-positive gaussian bandwidth.
    void validate() const;
};

/// Lattice points closer than this to 0 or 1 are clamped before the quantile.
inline constexpr double quantile_clamp = 1e-10;

/// Standard normal quantile. Acklam's rational approximation refined by one
/// Halley step on erfc; evaluated in the lower tail (using 1 - u for u > 1/2)
/// so the refinement never suffers cancellation. Throws DomainError outside
/// the open interval (0, 1).
double inv_normal_cdf(double u);

double exact_kernel(std::span<const double> x, std::span<const double> y, const KernelSpec& spec);

/// Full N x N kernel matrix of the rows of data.
Eigen::MatrixXd exact_gram(const Eigen::MatrixXd& data, const KernelSpec& spec);

struct FeatureMatrix {
    Eigen::MatrixXd features; // N x (2n) for gaussian, N x n for arc-cosine
    KernelSpec spec;
    std::size_t n_frequencies = 0;
};

/// Frequencies w_i = Phi^-1(eps_i) (divided by sigma for the gaussian kernel)
/// from the points eps_i, clamped to [1e-10, 1 - 1e-10].
///   gaussian: (1/sqrt(n)) [cos(x^T w_i) ..., sin(x^T w_i) ...]
///   arccos0:  sqrt(2/n) step(x^T w_i)
///   arccos1:  sqrt(2/n) max(0, x^T w_i)
/// Throws PreconditionError for an unshifted lattice (its origin row would sit
/// on the clamp) and DomainError on a dimension mismatch.
FeatureMatrix feature_map(const Eigen::MatrixXd& data, const LatticePointSet& points, const KernelSpec& spec);

/// Phi Phi^T, symmetric by construction.
Eigen::MatrixXd approx_gram(const FeatureMatrix& features);

struct GramErrors {
    double rel_frobenius;
    double rel_max;
};

/// |K~ - K|_F / |K|_F and max|K~ - K| / max|K|. Throws DomainError on
/// mismatched shapes or an all-zero exact matrix.
GramErrors gram_errors(const Eigen::MatrixXd& exact, const Eigen::MatrixXd& approx);

struct MixtureSpec {
    std::size_t clusters = 5;
    double center_scale = 6.0; // centers ~ N(0, center_scale^2) per coordinate
    double spread = 3.0;       // within-cluster N(0, spread^2)
};

/// Seeded Gaussian-mixture data. Centers depend only on `seed`; samples on
/// (seed, run), so runs share one mixture but draw fresh samples.
Eigen::MatrixXd synthetic_mixture(std::size_t samples, std::size_t d, std::uint64_t seed, std::uint64_t run = 0,
                                  const MixtureSpec& mixture = {});

} // namespace lattice_forge
