#pragma once

// Experiment drivers behind the command-line tool. Each driver is
// deterministic given its config: per-run shifts and Monte Carlo draws come
// from derive_seed(seed, stream, run).

#include "lattice_forge/integration.hpp"
#include "lattice_forge/kernels.hpp"
#include "lattice_forge/lattice.hpp"
#include "lattice_forge/pointset.hpp"
#include "lattice_forge/sphere.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lattice_forge {

enum class Method { subgroup, korobov, mc };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

/// Produces the point set a method uses in each run. Lattice methods build
/// their generating vector once (Korobov searches under `korobov_norm`) and
/// apply a fresh random shift per run unless shifting is disabled.
class PointFactory {
public:
    PointFactory(Method method, std::size_t d, std::uint64_t n, std::uint64_t seed, bool shift = true,
                 Norm korobov_norm = Norm::l2);

    LatticePointSet points(std::size_t run) const;
    Method method() const { return method_; }
    const std::optional<GeneratingVector>& generator() const { return generator_; }

private:
    Method method_;
    std::size_t d_;
    std::uint64_t n_;
    std::uint64_t seed_;
    bool shift_;
    std::optional<LatticePointSet> base_;
    std::optional<GeneratingVector> generator_;
};

struct BenchmarkRow {
    std::string method;
    std::size_t d;
    std::uint64_t n;
    std::uint64_t seed;
    std::size_t run;
    double estimate;
    double exact;
    double rel_error;
};

struct MethodSummary {
    std::string method;
    std::size_t runs;
    double mean_estimate;
    double std_estimate;
    double mean_rel_error;
    double std_rel_error;
};

/// Mean and sample standard deviation per method, in first-seen order.
std::vector<MethodSummary> summarize(const std::vector<BenchmarkRow>& rows);

struct IntegrationConfig {
    TestIntegrand integrand{2.0, 1.0, 100};
    std::uint64_t n = 401;
    std::vector<Method> methods{Method::subgroup, Method::mc};
    std::size_t runs = 50;
    std::uint64_t seed = 0;
    bool shift = true;
};

std::vector<BenchmarkRow> run_integration(const IntegrationConfig& config);

enum class BoltzmannTarget { partition, marginal };

struct BoltzmannConfig {
    std::size_t d = 10;
    std::uint64_t n = 1021;
    std::vector<Method> methods{Method::subgroup, Method::mc};
    std::size_t runs = 50;
    std::uint64_t seed = 0; // fixes the model, the observation and the reference
    std::size_t reference_samples = 10'000'000;
    BoltzmannTarget target = BoltzmannTarget::partition;
};

struct BoltzmannResult {
    BoltzmannModel model;
    double reference_Z;
    std::optional<std::vector<double>> observation;
    std::optional<double> reference_marginal;
    std::vector<BenchmarkRow> rows;
};

BoltzmannResult run_boltzmann(const BoltzmannConfig& config);

struct KernelRow {
    std::string method;
    std::string kernel;
    std::size_t d;
    std::uint64_t n;
    std::uint64_t seed;
    std::size_t run;
    double rel_frobenius;
    double rel_max;
};

struct KernelConfig {
    KernelSpec spec;
    std::size_t d = 10;
    std::uint64_t n = 1021;
    std::size_t samples = 2000;
    std::vector<Method> methods{Method::subgroup, Method::mc};
    std::size_t runs = 50;
    std::uint64_t seed = 0;
    /// When set, each run draws `samples` rows without replacement from it
    /// (all rows if it has fewer); otherwise synthetic_mixture supplies them.
    std::optional<Eigen::MatrixXd> data;
};

/// The data matrix used in a given run.
Eigen::MatrixXd kernel_data(const KernelConfig& config, std::size_t run);
std::vector<KernelRow> run_kernel(const KernelConfig& config);

struct SphereRow {
    std::size_t d;
    std::size_t m;
    std::uint64_t n;
    std::size_t points;
    double mu;
    double bound_t3;
    bool bound_holds;
    double bound_t4;
    bool t4_applicable;
    std::optional<double> pairwise_mu;
};

/// d must be even; m = d / 2.
SphereRow run_sphere(std::size_t d, std::uint64_t n, bool verify_pairwise);

struct TimingRow {
    std::string method;
    std::size_t d;
    std::uint64_t n;
    double seconds;
    double score;
};

/// Wall-clock time of subgroup construction and of the exhaustive Korobov
/// search at the same (d, n); score is the minimum distance under `norm`.
std::vector<TimingRow> run_timing(std::size_t d, std::uint64_t n, Norm norm);

} // namespace lattice_forge
