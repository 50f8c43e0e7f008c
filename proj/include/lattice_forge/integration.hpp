#pragma once

#include "lattice_forge/pointset.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <span>

namespace lattice_forge {

/// f(x) = exp(c * sum_j x_j j^-b) on [0,1]^d.
struct TestIntegrand {
    double b = 2.0;
    double c = 1.0;
    std::size_t d = 1;
};

double test_integrand(std::span<const double> x, const TestIntegrand& spec);

/// prod_j (exp(c j^-b) - 1) / (c j^-b), accumulated as a sum of logs.
/// Throws DomainError for c = 0.
double test_integral_exact(const TestIntegrand& spec);

using Integrand = std::function<double(std::span<const double>)>;

/// Mean of f over the points (compensated summation, fixed order).
double qmc_estimate(const LatticePointSet& points, const Integrand& f);

/// |estimate - exact| / |exact|. Throws DomainError when exact = 0.
double relative_error(double estimate, double exact);

/// Continuous-state Boltzmann machine on [0,1]^d.
///   E(x)    = -(x^T W x + b^T x) / d
///   f(v, h) = -(v^T W_v v + 2 v^T W_h h + b_v^T v) / d
struct BoltzmannModel {
    Eigen::MatrixXd W;
    Eigen::VectorXd b;
    Eigen::MatrixXd W_v;
    Eigen::MatrixXd W_h;
    Eigen::VectorXd b_v;
    std::uint64_t seed = 0;

    std::size_t dimension() const { return static_cast<std::size_t>(b.size()); }

    /// All entries i.i.d. N(0,1) from the model stream of `seed`.
    static BoltzmannModel draw(std::size_t d, std::uint64_t seed);
    static BoltzmannModel zero(std::size_t d);
};

double boltzmann_energy(std::span<const double> x, const BoltzmannModel& model);

/// Mean of exp(-E(x)) over the points.
double estimate_partition(const LatticePointSet& points, const BoltzmannModel& model);

/// Mean over points h of exp(-f(v, h)) exp(-E(h)) / Z. Throws DomainError for Z <= 0.
double estimate_marginal(std::span<const double> v, const LatticePointSet& points, const BoltzmannModel& model,
                         double Z);

/// Plain MC reference for Z from `samples` i.i.d. points, streamed one at a time.
double mc_partition_reference(const BoltzmannModel& model, std::size_t samples, std::uint64_t seed);

/// Plain MC reference for the marginal likelihood of v.
double mc_marginal_reference(std::span<const double> v, const BoltzmannModel& model, double Z,
                             std::size_t samples, std::uint64_t seed);

} // namespace lattice_forge
