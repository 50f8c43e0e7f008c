#include "lattice_forge/experiments.hpp"

#include "lattice_forge/errors.hpp"
#include "lattice_forge/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

namespace lattice_forge {

namespace {


PrimeModulus require_prime(std::uint64_t n)
{
    return PrimeModulus(n);
}

Eigen::MatrixXd sample_rows(const Eigen::MatrixXd& data, std::size_t samples, std::uint64_t seed, std::size_t run)
{
    const auto rows = static_cast<std::size_t>(data.rows());
    if (rows <= samples)
        return data;
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    auto rng = make_rng(seed, streams::data, run + 1);
    // Partial Fisher-Yates with our own uniform draws keeps it reproducible.
    for (std::size_t i = 0; i < samples; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(rows - i));
        std::swap(order[i], order[std::min(j, rows - 1)]);
    }
    Eigen::MatrixXd out(static_cast<Eigen::Index>(samples), data.cols());
    for (std::size_t i = 0; i < samples; ++i)
        out.row(static_cast<Eigen::Index>(i)) = data.row(static_cast<Eigen::Index>(order[i]));
    return out;
}

} // namespace

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::subgroup:
        return "subgroup";
    case Method::korobov:
        return "korobov";
    case Method::mc:
        break;
    }
    return "mc";
}

Method parse_method(std::string_view text)
{
    if (text == "subgroup")
        return Method::subgroup;
    if (text == "korobov")
        return Method::korobov;
    if (text == "mc")
        return Method::mc;
    throw DomainError("unknown method '" + std::string(text) + "' (expected subgroup, korobov or mc)");
}

PointFactory::PointFactory(Method method, std::size_t d, std::uint64_t n, std::uint64_t seed, bool shift,
                           Norm korobov_norm)
    : method_(method), d_(d), n_(n), seed_(seed), shift_(shift)
{
    switch (method) {
    case Method::subgroup:
        generator_ = subgroup_generating_vector(d, n);
        break;
    case Method::korobov:
        generator_ = korobov_search(d, require_prime(n), korobov_norm).vector;
        break;
    case Method::mc:
        if (n == 0 || d == 0)
            throw DomainError("Monte Carlo points need n >= 1 and d >= 1");
        break;
    }
    if (generator_)
        base_ = generate(*generator_);
}

LatticePointSet PointFactory::points(std::size_t run) const
{
    if (method_ == Method::mc)
        return mc_points(n_, d_, derive_seed(seed_, streams::monte_carlo, run));
    if (!shift_)
        return *base_;
    return random_shift(*base_, derive_seed(seed_, streams::shift, run));
}

std::vector<MethodSummary> summarize(const std::vector<BenchmarkRow>& rows)
{
    std::vector<MethodSummary> out;
    std::vector<std::string> order;
    for (const auto& r : rows)
        if (std::find(order.begin(), order.end(), r.method) == order.end())
            order.push_back(r.method);

    for (const auto& method : order) {
        std::vector<double> est;
        std::vector<double> err;
        for (const auto& r : rows) {
            if (r.method == method) {
                est.push_back(r.estimate);
                err.push_back(r.rel_error);
            }
        }
        auto mean = [](const std::vector<double>& v) {
            return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        };
        auto stddev = [&](const std::vector<double>& v) {
            if (v.size() < 2)
                return 0.0;
            const double mu = mean(v);
            double acc = 0.0;
            for (double x : v)
                acc += (x - mu) * (x - mu);
            return std::sqrt(acc / static_cast<double>(v.size() - 1));
        };
        out.push_back({method, est.size(), mean(est), stddev(est), mean(err), stddev(err)});
    }
    return out;
}

std::vector<BenchmarkRow> run_integration(const IntegrationConfig& config)
{
    const auto& f = config.integrand;
    const double exact = test_integral_exact(f);
    std::vector<BenchmarkRow> rows;
    for (auto method : config.methods) {
        const PointFactory factory(method, f.d, config.n, config.seed, config.shift);
        for (std::size_t run = 0; run < config.runs; ++run) {
            const auto ps = factory.points(run);
            const double estimate = qmc_estimate(ps, [&](std::span<const double> x) { return test_integrand(x, f); });
            rows.push_back({std::string(to_string(method)), f.d, config.n, config.seed, run, estimate, exact,
                            relative_error(estimate, exact)});
        }
    }
    return rows;
}

BoltzmannResult run_boltzmann(const BoltzmannConfig& config)
{
    if (config.reference_samples == 0)
        throw DomainError("reference sample count must be positive");
    BoltzmannResult result{BoltzmannModel::draw(config.d, config.seed), 0.0, std::nullopt, std::nullopt, {}};
    const auto& model = result.model;
    result.reference_Z = mc_partition_reference(model, config.reference_samples, config.seed);

    double exact = result.reference_Z;
    if (config.target == BoltzmannTarget::marginal) {
        auto rng = make_rng(config.seed, streams::observation);
        std::vector<double> v(config.d);
        for (auto& x : v)
            x = uniform01(rng);
        result.reference_marginal =
            mc_marginal_reference(v, model, result.reference_Z, config.reference_samples, config.seed);
        result.observation = std::move(v);
        exact = *result.reference_marginal;
    }

    for (auto method : config.methods) {
        const PointFactory factory(method, config.d, config.n, config.seed);
        for (std::size_t run = 0; run < config.runs; ++run) {
            const auto ps = factory.points(run);
            double estimate;
            if (config.target == BoltzmannTarget::partition) {
                estimate = estimate_partition(ps, model);
            } else {
                // Each method estimates Z with its own points, as it would without a reference.
                const double z_hat = estimate_partition(ps, model);
                estimate = estimate_marginal(*result.observation, ps, model, z_hat);
            }
            result.rows.push_back({std::string(to_string(method)), config.d, config.n, config.seed, run, estimate,
                                   exact, relative_error(estimate, exact)});
        }
    }
    return result;
}

Eigen::MatrixXd kernel_data(const KernelConfig& config, std::size_t run)
{
    return config.data ? sample_rows(*config.data, config.samples, config.seed, run)
                       : synthetic_mixture(config.samples, config.d, config.seed, run);
}

std::vector<KernelRow> run_kernel(const KernelConfig& config)
{
    config.spec.validate();
    const std::size_t d = config.data ? static_cast<std::size_t>(config.data->cols()) : config.d;
    std::vector<PointFactory> factories;
    for (auto method : config.methods)
        factories.emplace_back(method, d, config.n, config.seed);

    std::vector<KernelRow> rows;
    for (std::size_t run = 0; run < config.runs; ++run) {
        const Eigen::MatrixXd data = kernel_data(config, run);
        const Eigen::MatrixXd exact = exact_gram(data, config.spec);
        for (const auto& factory : factories) {
            const auto ps = factory.points(run);
            const auto errors = gram_errors(exact, approx_gram(feature_map(data, ps, config.spec)));
            rows.push_back({std::string(to_string(factory.method())), std::string(to_string(config.spec.family)), d,
                            config.n, config.seed, run, errors.rel_frobenius, errors.rel_max});
        }
    }
    return rows;
}

SphereRow run_sphere(std::size_t d, std::uint64_t n, bool verify_pairwise)
{
    if (d == 0 || d % 2 != 0)
        throw AdmissibilityError("sphere dimension d must be even and positive, got " + std::to_string(d));
    const std::size_t m = d / 2;
    const auto frame = sphere_frame(m, require_prime(n));
    const auto report = mutual_coherence(frame);
    const auto t4 = coherence_bound_t4(m, n);
    SphereRow row{d, m, n, 2 * static_cast<std::size_t>(n), report.mu, report.bound_t3, report.bound_holds,
                  t4.value, t4.applicable, std::nullopt};
    if (verify_pairwise)
        row.pairwise_mu = pairwise_coherence(frame.V);
    return row;
}

std::vector<TimingRow> run_timing(std::size_t d, std::uint64_t n, Norm norm)
{
    using clock = std::chrono::steady_clock;
    const auto prime = require_prime(n);

    const auto t0 = clock::now();
    const auto subgroup = subgroup_generating_vector(d, prime);
    const auto t1 = clock::now();
    const auto korobov = korobov_search(d, prime, norm);
    const auto t2 = clock::now();

    const auto seconds = [](auto a, auto b) { return std::chrono::duration<double>(b - a).count(); };
    return {
        {"subgroup", d, n, seconds(t0, t1), lattice_min_distance(subgroup, norm).min_distance},
        {"korobov", d, n, seconds(t1, t2), korobov.score},
    };
}

} // namespace lattice_forge
