#include "lattice_forge/kernels.hpp"

#include "lattice_forge/errors.hpp"
#include "lattice_forge/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace lattice_forge {

namespace {

// Acklam's coefficients; relative error below 1.15e-9 before refinement.
constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                  1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                  6.680131188771972e+01,  -1.328068155288572e+01};
constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                  -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr std::array<double, 4> dcoef{7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                      3.754408661907416e+00};

// Quantile for p in (0, 1/2].
double lower_quantile(double p)
{
    constexpr double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((dcoef[0] * q + dcoef[1]) * q + dcoef[2]) * q + dcoef[3]) * q + 1.0);
    } else {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    // Halley step; x <= 0 here so erfc(-x/sqrt2) is evaluated without cancellation.
    const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

double norm2(std::span<const double> x)
{
    double acc = 0.0;
    for (double v : x)
        acc += v * v;
    return std::sqrt(acc);
}

} // namespace

std::string_view to_string(KernelFamily family)
{
    switch (family) {
    case KernelFamily::gaussian:
        return "gaussian";
    case KernelFamily::arccos0:
        return "arccos0";
    case KernelFamily::arccos1:
        break;
    }
    return "arccos1";
}

KernelFamily parse_kernel_family(std::string_view text)
{
    if (text == "gaussian")
        return KernelFamily::gaussian;
    if (text == "arccos0")
        return KernelFamily::arccos0;
    if (text == "arccos1")
        return KernelFamily::arccos1;
    throw DomainError("unknown kernel '" + std::string(text) + "' (expected gaussian, arccos0 or arccos1)");
}

void KernelSpec::validate() const
{
    if (family == KernelFamily::gaussian && !(sigma > 0.0))
        throw DomainError("gaussian bandwidth sigma must be positive");
}

double inv_normal_cdf(double u)
{
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("inv_normal_cdf: argument must lie in (0, 1)");
    if (u == 0.5)
        return 0.0;
    return u < 0.5 ? lower_quantile(u) : -lower_quantile(1.0 - u);
}

double exact_kernel(std::span<const double> x, std::span<const double> y, const KernelSpec& spec)
{
    spec.validate();
    if (x.size() != y.size())
        throw DomainError("exact_kernel: dimension mismatch");

    if (spec.family == KernelFamily::gaussian) {
        double sq = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            sq += (x[i] - y[i]) * (x[i] - y[i]);
        return std::exp(-sq / (2.0 * spec.sigma * spec.sigma));
    }

    const double nx = norm2(x);
    const double ny = norm2(y);
    if (nx == 0.0 || ny == 0.0)
        throw DomainError("arc-cosine kernels are undefined for a zero vector");
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        dot += x[i] * y[i];
    const double theta = std::acos(std::clamp(dot / (nx * ny), -1.0, 1.0));
    if (spec.family == KernelFamily::arccos0)
        return 1.0 - theta / std::numbers::pi;
    return nx * ny / std::numbers::pi * (std::sin(theta) + (std::numbers::pi - theta) * std::cos(theta));
}

Eigen::MatrixXd exact_gram(const Eigen::MatrixXd& data, const KernelSpec& spec)
{
    spec.validate();
    const Eigen::Index N = data.rows();
    // Row-major copy so each sample is contiguous.
    const RowMatrix rows = data;
    const auto d = static_cast<std::size_t>(data.cols());
    Eigen::MatrixXd K(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
        const std::span<const double> xi(rows.data() + i * data.cols(), d);
        K(i, i) = exact_kernel(xi, xi, spec);
        for (Eigen::Index j = i + 1; j < N; ++j) {
            const std::span<const double> xj(rows.data() + j * data.cols(), d);
            K(i, j) = K(j, i) = exact_kernel(xi, xj, spec);
        }
    }
    return K;
}

FeatureMatrix feature_map(const Eigen::MatrixXd& data, const LatticePointSet& points, const KernelSpec& spec)
{
    spec.validate();
    if (points.is_unshifted_lattice())
        throw PreconditionError("feature_map: unshifted lattice contains the origin; apply a random shift first");
    if (static_cast<std::size_t>(data.cols()) != points.dimension())
        throw DomainError("feature_map: data dimension " + std::to_string(data.cols()) +
                          " does not match point dimension " + std::to_string(points.dimension()));

    const auto n = static_cast<Eigen::Index>(points.size());
    const double scale = spec.family == KernelFamily::gaussian ? 1.0 / spec.sigma : 1.0;
    Eigen::MatrixXd frequencies(n, data.cols());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < data.cols(); ++j)
            frequencies(i, j) =
                scale * inv_normal_cdf(std::clamp(points.points(i, j), quantile_clamp, 1.0 - quantile_clamp));

    const Eigen::MatrixXd projection = data * frequencies.transpose(); // N x n
    FeatureMatrix out{{}, spec, static_cast<std::size_t>(n)};
    const double nn = static_cast<double>(n);
    switch (spec.family) {
    case KernelFamily::gaussian:
        out.features.resize(data.rows(), 2 * n);
        out.features.leftCols(n) = projection.array().cos() / std::sqrt(nn);
        out.features.rightCols(n) = projection.array().sin() / std::sqrt(nn);
        break;
    case KernelFamily::arccos0:
        out.features = (projection.array() > 0.0).cast<double>() * std::sqrt(2.0 / nn);
        break;
    case KernelFamily::arccos1:
        out.features = projection.array().max(0.0) * std::sqrt(2.0 / nn);
        break;
    }
    return out;
}

Eigen::MatrixXd approx_gram(const FeatureMatrix& features)
{
    const Eigen::Index N = features.features.rows();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N, N);
    K.selfadjointView<Eigen::Lower>().rankUpdate(features.features);
    K.triangularView<Eigen::StrictlyUpper>() = K.transpose();
    return K;
}

GramErrors gram_errors(const Eigen::MatrixXd& exact, const Eigen::MatrixXd& approx)
{
    if (exact.rows() != exact.cols() || exact.rows() != approx.rows() || exact.cols() != approx.cols())
        throw DomainError("gram_errors: matrices must be square and of equal shape");
    const double frob = exact.norm();
    const double peak = exact.cwiseAbs().maxCoeff();
    if (frob == 0.0 || peak == 0.0)
        throw DomainError("gram_errors: exact kernel matrix is zero");
    const Eigen::MatrixXd diff = approx - exact;
    return {diff.norm() / frob, diff.cwiseAbs().maxCoeff() / peak};
}

Eigen::MatrixXd synthetic_mixture(std::size_t samples, std::size_t d, std::uint64_t seed, std::uint64_t run,
                                  const MixtureSpec& mixture)
{
    if (samples == 0 || d == 0 || mixture.clusters == 0)
        throw DomainError("synthetic_mixture needs samples, d and clusters >= 1");
    auto center_rng = make_rng(seed, streams::data);
    Eigen::MatrixXd centers(static_cast<Eigen::Index>(mixture.clusters), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < centers.size(); ++i)
        centers.data()[i] = mixture.center_scale * standard_normal(center_rng);

    auto rng = make_rng(seed, streams::data, run + 1);
    std::uniform_int_distribution<std::size_t> pick(0, mixture.clusters - 1);
    Eigen::MatrixXd data(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        const auto cluster = static_cast<Eigen::Index>(pick(rng));
        for (Eigen::Index j = 0; j < data.cols(); ++j)
            data(i, j) = centers(cluster, j) + mixture.spread * standard_normal(rng);
    }
    return data;
}

} // namespace lattice_forge
