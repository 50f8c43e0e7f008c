#include "lattice_forge/sphere.hpp"

#include "lattice_forge/csv.hpp"
#include "lattice_forge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lattice_forge {

namespace {

// Reduce k j mod n in integers before taking the angle so large products keep full precision.
double phase(std::uint64_t k, std::uint64_t j, std::uint64_t n)
{
    return 2.0 * std::numbers::pi * static_cast<double>(mul_mod(k, j, n)) / static_cast<double>(n);
}

} // namespace

std::vector<std::uint64_t> sphere_index_set(std::size_t m, PrimeModulus n)
{
    if (m == 0)
        throw AdmissibilityError("half-dimension m must be positive");
    if ((n.value() - 1) % m != 0)
        throw AdmissibilityError("m does not divide n-1 (m=" + std::to_string(m) +
                                 ", n-1=" + std::to_string(n.value() - 1) + ")");
    const std::uint64_t gen = mod_pow(primitive_root(n), (n.value() - 1) / m, n);
    std::vector<std::uint64_t> index(m);
    std::uint64_t power = 1;
    for (auto& k : index) {
        k = power;
        power = mul_mod(power, gen, n);
    }
    return index;
}

SphericalFrame sphere_frame(std::size_t m, PrimeModulus n)
{
    auto index = sphere_index_set(m, n);
    const auto mm = static_cast<Eigen::Index>(m);
    const auto nn = static_cast<Eigen::Index>(n.value());
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));

    Eigen::MatrixXd V(2 * mm, 2 * nn);
    for (Eigen::Index r = 0; r < mm; ++r) {
        for (Eigen::Index col = 0; col < nn; ++col) {
            const double angle = phase(index[static_cast<std::size_t>(r)], static_cast<std::uint64_t>(col + 1), n);
            const double re = scale * std::cos(angle);
            const double im = scale * std::sin(angle);
            V(r, col) = re;
            V(r, nn + col) = -im;
            V(mm + r, col) = im;
            V(mm + r, nn + col) = re;
        }
    }
    return {std::move(V), m, n, std::move(index)};
}

CoherenceReport mutual_coherence(const SphericalFrame& frame)
{
    const std::uint64_t n = frame.n.value();
    double best = 0.0;
    for (std::uint64_t t = 1; t < n; ++t) {
        double re = 0.0;
        double im = 0.0;
        for (auto k : frame.index_set) {
            const double angle = phase(k, t, n);
            re += std::cos(angle);
            im += std::sin(angle);
        }
        best = std::max({best, std::abs(re), std::abs(im)});
    }
    const double m = static_cast<double>(frame.m);
    const double mu = best / m;
    const double bound = std::sqrt(static_cast<double>(n)) / m;
    return {mu, bound, mu <= bound + 1e-12};
}

double pairwise_coherence(const Eigen::MatrixXd& V)
{
    if (V.cols() < 2)
        throw PreconditionError("pairwise_coherence: need at least two columns");
    Eigen::MatrixXd gram = V.transpose() * V;
    gram.diagonal().setZero();
    return gram.cwiseAbs().maxCoeff();
}

Theorem4Bound coherence_bound_t4(std::size_t m, std::uint64_t n)
{
    const double mm = static_cast<double>(m);
    const double nn = static_cast<double>(n);
    const bool applicable = m >= 1 && mm <= std::pow(nn, 2.0 / 3.0);
    if (m <= 1)
        return {0.0, applicable};
    return {std::pow(mm, -0.5) * std::pow(nn, 1.0 / 6.0) * std::pow(std::log(mm), 1.0 / 6.0), applicable};
}

void write_frame_csv(std::ostream& out, const SphericalFrame& frame)
{
    write_csv_matrix(out, frame.V);
}

} // namespace lattice_forge
