#include "lattice_forge/integration.hpp"

#include "lattice_forge/errors.hpp"
#include "lattice_forge/random.hpp"

#include <cmath>
#include <string>

namespace lattice_forge {

namespace {

// Neumaier summation.
class CompensatedSum {
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void require_dimension(std::size_t got, std::size_t want, const char* what)
{
    if (got != want)
        throw DomainError(std::string(what) + ": dimension " + std::to_string(got) + " does not match model " +
                          std::to_string(want));
}

double quadratic_energy(std::span<const double> x, const Eigen::MatrixXd& W, const Eigen::VectorXd& b)
{
    // Hand-rolled to avoid a temporary per evaluation; W is column-major.
    const auto d = static_cast<Eigen::Index>(x.size());
    double acc = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        double column = b(j);
        for (Eigen::Index i = 0; i < d; ++i)
            column += x[static_cast<std::size_t>(i)] * W(i, j);
        acc += column * x[static_cast<std::size_t>(j)];
    }
    return acc;
}

// Coupling term shared by every h for fixed v: v^T W_v v + b_v^T v, and the row v^T W_h.
struct ObservationTerms {
    double constant;
    Eigen::RowVectorXd coupling;
};

ObservationTerms observation_terms(std::span<const double> v, const BoltzmannModel& model)
{
    const Eigen::Map<const Eigen::VectorXd> vv(v.data(), static_cast<Eigen::Index>(v.size()));
    return {vv.dot(model.W_v * vv) + model.b_v.dot(vv), vv.transpose() * model.W_h};
}

double marginal_integrand(std::span<const double> h, const ObservationTerms& obs, const BoltzmannModel& model)
{
    const double d = static_cast<double>(model.dimension());
    const Eigen::Map<const Eigen::VectorXd> hh(h.data(), static_cast<Eigen::Index>(h.size()));
    const double neg_f = (obs.constant + 2.0 * obs.coupling.dot(hh)) / d;
    return std::exp(neg_f - boltzmann_energy(h, model));
}

} // namespace

double test_integrand(std::span<const double> x, const TestIntegrand& spec)
{
    double acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        acc += x[j] * std::pow(static_cast<double>(j + 1), -spec.b);
    return std::exp(spec.c * acc);
}

double test_integral_exact(const TestIntegrand& spec)
{
    if (spec.c == 0.0)
        throw DomainError("test_integral_exact: c must be nonzero");
    CompensatedSum log_sum;
    for (std::size_t j = 1; j <= spec.d; ++j) {
        const double a = spec.c * std::pow(static_cast<double>(j), -spec.b);
        // (e^a - 1)/a via expm1 keeps factors near 1 accurate as a -> 0.
        log_sum.add(std::log(std::expm1(a) / a));
    }
    return std::exp(log_sum.value());
}

double qmc_estimate(const LatticePointSet& points, const Integrand& f)
{
    if (points.size() == 0)
        throw DomainError("qmc_estimate: empty point set");
    CompensatedSum sum;
    for (std::size_t i = 0; i < points.size(); ++i)
        sum.add(f(points.point(i)));
    return sum.value() / static_cast<double>(points.size());
}

double relative_error(double estimate, double exact)
{
    if (exact == 0.0)
        throw DomainError("relative_error: exact value is zero");
    return std::abs(estimate - exact) / std::abs(exact);
}

BoltzmannModel BoltzmannModel::draw(std::size_t d, std::uint64_t seed)
{
    auto rng = make_rng(seed, streams::model);
    auto fill = [&](auto& m) {
        for (Eigen::Index i = 0; i < m.size(); ++i)
            m.data()[i] = standard_normal(rng);
    };
    const auto dd = static_cast<Eigen::Index>(d);
    BoltzmannModel model{Eigen::MatrixXd(dd, dd), Eigen::VectorXd(dd), Eigen::MatrixXd(dd, dd),
                         Eigen::MatrixXd(dd, dd), Eigen::VectorXd(dd), seed};
    fill(model.W);
    fill(model.b);
    fill(model.W_v);
    fill(model.W_h);
    fill(model.b_v);
    return model;
}

BoltzmannModel BoltzmannModel::zero(std::size_t d)
{
    const auto dd = static_cast<Eigen::Index>(d);
    return {Eigen::MatrixXd::Zero(dd, dd), Eigen::VectorXd::Zero(dd), Eigen::MatrixXd::Zero(dd, dd),
            Eigen::MatrixXd::Zero(dd, dd), Eigen::VectorXd::Zero(dd), 0};
}

double boltzmann_energy(std::span<const double> x, const BoltzmannModel& model)
{
    require_dimension(x.size(), model.dimension(), "boltzmann_energy");
    return -quadratic_energy(x, model.W, model.b) / static_cast<double>(model.dimension());
}

double estimate_partition(const LatticePointSet& points, const BoltzmannModel& model)
{
    require_dimension(points.dimension(), model.dimension(), "estimate_partition");
    return qmc_estimate(points, [&](std::span<const double> x) { return std::exp(-boltzmann_energy(x, model)); });
}

double estimate_marginal(std::span<const double> v, const LatticePointSet& points, const BoltzmannModel& model,
                         double Z)
{
    if (!(Z > 0.0))
        throw DomainError("estimate_marginal: Z must be positive");
    require_dimension(v.size(), model.dimension(), "estimate_marginal");
    require_dimension(points.dimension(), model.dimension(), "estimate_marginal");
    const auto obs = observation_terms(v, model);
    return qmc_estimate(points, [&](std::span<const double> h) { return marginal_integrand(h, obs, model); }) / Z;
}

double mc_partition_reference(const BoltzmannModel& model, std::size_t samples, std::uint64_t seed)
{
    auto rng = make_rng(seed, streams::ground_truth);
    const std::size_t d = model.dimension();
    std::vector<double> x(d);
    CompensatedSum sum;
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto& v : x)
            v = uniform01(rng);
        sum.add(std::exp(-boltzmann_energy(x, model)));
    }
    return sum.value() / static_cast<double>(samples);
}

double mc_marginal_reference(std::span<const double> v, const BoltzmannModel& model, double Z,
                             std::size_t samples, std::uint64_t seed)
{
    if (!(Z > 0.0))
        throw DomainError("mc_marginal_reference: Z must be positive");
    auto rng = make_rng(seed, streams::ground_truth, 1);
    const auto obs = observation_terms(v, model);
    std::vector<double> h(model.dimension());
    CompensatedSum sum;
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto& x : h)
            x = uniform01(rng);
        sum.add(marginal_integrand(h, obs, model));
    }
    return sum.value() / static_cast<double>(samples) / Z;
}

} // namespace lattice_forge
