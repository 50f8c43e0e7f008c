#include "cli_app.hpp"

#include "output.hpp"

#include "lattice_forge/csv.hpp"
#include "lattice_forge/errors.hpp"
#include "lattice_forge/experiments.hpp"
#include "lattice_forge/lattice.hpp"
#include "lattice_forge/metrics.hpp"
#include "lattice_forge/numtheory.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

namespace lattice_forge::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Globals {
    std::string format = "csv";
    std::string output;
    bool deterministic = false;

    OutputOptions options() const { return {format == "json" ? Format::json : Format::csv, deterministic}; }
};

/// Writes to --output when given, else to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw PreconditionError("cannot open output file " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

void require(bool condition, const std::string& message)
{
    if (!condition)
        throw UsageError(message);
}

PrimeModulus admissible_prime(std::uint64_t n)
{
    if (!is_prime(n))
        throw AdmissibilityError("n=" + std::to_string(n) + " is not prime");
    return PrimeModulus(n);
}

std::vector<Method> parse_methods(const std::vector<std::string>& names)
{
    std::vector<Method> methods;
    for (const auto& name : names)
        methods.push_back(parse_method(name));
    return methods;
}

std::vector<std::uint64_t> to_vector(const GeneratingVector& z)
{
    return {z.components().begin(), z.components().end()};
}

std::string census_string(const DistanceReport& report)
{
    std::string s;
    for (const auto& entry : report.census) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(entry.key) + ':' + std::to_string(entry.multiplicity);
    }
    return s;
}

/// Appends "mean" and "std" rows per method (column 0) for the listed value
/// columns; other columns are copied from the method's first row and the run
/// column holds the row label.
void add_summary(Table& table, std::size_t run_column, const std::vector<std::size_t>& value_columns)
{
    std::vector<std::string> order;
    std::map<std::string, std::vector<const Row*>> groups;
    for (const auto& row : table.rows) {
        const auto& method = std::get<std::string>(row[0]);
        if (!groups.contains(method))
            order.push_back(method);
        groups[method].push_back(&row);
    }
    for (const auto& method : order) {
        const auto& rows = groups[method];
        Row mean_row = *rows.front();
        Row std_row = *rows.front();
        mean_row[run_column] = std::string("mean");
        std_row[run_column] = std::string("std");
        for (auto c : value_columns) {
            double sum = 0.0;
            for (const auto* row : rows)
                sum += std::get<double>((*row)[c]);
            const double mean = sum / static_cast<double>(rows.size());
            double ss = 0.0;
            for (const auto* row : rows) {
                const double dev = std::get<double>((*row)[c]) - mean;
                ss += dev * dev;
            }
            mean_row[c] = mean;
            std_row[c] = rows.size() > 1 ? std::sqrt(ss / static_cast<double>(rows.size() - 1)) : 0.0;
        }
        table.summary.push_back(std::move(mean_row));
        table.summary.push_back(std::move(std_row));
    }
}

Table benchmark_table(const std::string& command, const std::vector<BenchmarkRow>& rows, const std::string& exact_name)
{
    Table table{command, {"method", "d", "n", "seed", "run", "estimate", exact_name, "rel_error"}, {}, {}};
    for (const auto& r : rows)
        table.rows.push_back({r.method, std::uint64_t{r.d}, r.n, r.seed, std::uint64_t{r.run}, r.estimate, r.exact,
                              r.rel_error});
    add_summary(table, 4, {5, 7});
    return table;
}

// ---------------------------------------------------------------- commands

struct ConstructArgs {
    std::size_t d = 0;
    std::uint64_t n = 0;
    std::string method = "subgroup";
    std::vector<std::uint64_t> z;
    std::string norm = "l2";
};

Table construct(const ConstructArgs& a)
{
    require(a.d >= 1, "--d must be at least 1");
    std::optional<GeneratingVector> z;
    std::optional<std::uint64_t> multiplier;
    if (a.method == "subgroup") {
        require(a.z.empty(), "--z is only valid with --method explicit");
        z = subgroup_generating_vector(a.d, a.n);
    } else if (a.method == "korobov") {
        require(a.z.empty(), "--z is only valid with --method explicit");
        auto result = korobov_search(a.d, admissible_prime(a.n), parse_norm(a.norm));
        multiplier = result.multiplier;
        z = std::move(result.vector);
    } else {
        require(a.z.size() == a.d, "--method explicit needs --z with exactly d components");
        for (auto c : a.z)
            require(c >= 1 && c < a.n, "--z components must lie in [1, n-1]");
        z = GeneratingVector(a.z, admissible_prime(a.n), Construction::explicit_vector);
    }

    const auto l1 = lattice_min_distance(*z, Norm::l1);
    const auto l2 = lattice_min_distance(*z, Norm::l2);
    Row row{a.method, std::uint64_t{a.d}, a.n,
            multiplier ? Cell{*multiplier} : Cell{},
            to_vector(*z), l1.min_distance, l2.min_distance, l1.argmin_k, l2.argmin_k,
            std::uint64_t{l1.distinct_count()}, std::uint64_t{l2.distinct_count()}, census_string(l1),
            census_string(l2)};
    const bool bounds_apply = a.n >= 2 * a.d + 1 && !is_degenerate(*z);
    if (bounds_apply) {
        const auto bounds = theorem2_bounds(a.d, z->prime_modulus());
        row.insert(row.end(), {bounds.l1_lower, bounds.l1_upper, bounds.l2_lower, bounds.l2_upper,
                               check_bounds_exact(l1.min_key, a.d, a.n, Norm::l1).both(),
                               check_bounds_exact(l2.min_key, a.d, a.n, Norm::l2).both()});
    } else {
        row.insert(row.end(), 6, Cell{});
    }
    row.push_back(is_degenerate(*z));
    return {"construct",
            {"method", "d", "n", "multiplier", "z", "min_l1", "min_l2", "argmin_l1", "argmin_l2", "distinct_l1",
             "distinct_l2", "census_l1", "census_l2", "l1_lower", "l1_upper", "l2_lower", "l2_upper",
             "l1_within_bounds", "l2_within_bounds", "degenerate"},
            {std::move(row)},
            {}};
}

struct AdmissibleArgs {
    std::size_t d = 0;
    std::size_t count = 10;
    std::uint64_t start = 2;
};

Table admissible(const AdmissibleArgs& a)
{
    require(a.d >= 1, "--d must be at least 1");
    require(a.count >= 1, "--count must be at least 1");
    Table table{"admissible", {"index", "d", "n"}, {}, {}};
    const auto primes = find_admissible_n(a.d, a.count, a.start);
    for (std::size_t i = 0; i < primes.size(); ++i)
        table.rows.push_back({std::uint64_t{i}, std::uint64_t{a.d}, primes[i].value()});
    return table;
}

struct IntegrateArgs {
    std::size_t d = 100;
    std::uint64_t n = 401;
    double b = 2.0;
    double c = 1.0;
    std::vector<std::string> methods{"subgroup", "mc"};
    std::size_t runs = 50;
    std::uint64_t seed = 0;
    bool no_shift = false;
};

Table integrate(const IntegrateArgs& a)
{
    require(a.d >= 1, "--d must be at least 1");
    require(a.runs >= 1, "--runs must be at least 1");
    require(a.c != 0.0, "--c must be nonzero");
    IntegrationConfig config;
    config.integrand = {a.b, a.c, a.d};
    config.n = a.n;
    config.methods = parse_methods(a.methods);
    config.runs = a.runs;
    config.seed = a.seed;
    config.shift = !a.no_shift;
    return benchmark_table("integrate", run_integration(config), "exact");
}

struct BoltzmannArgs {
    std::size_t d = 10;
    std::uint64_t n = 1021;
    std::vector<std::string> methods{"subgroup", "mc"};
    std::size_t runs = 50;
    std::uint64_t seed = 0;
    std::size_t reference_samples = 10'000'000;
    std::string target = "partition";
};

Table boltzmann(const BoltzmannArgs& a)
{
    require(a.d >= 1, "--d must be at least 1");
    require(a.runs >= 1, "--runs must be at least 1");
    require(a.reference_samples >= 1, "--reference-samples must be at least 1");
    BoltzmannConfig config;
    config.d = a.d;
    config.n = a.n;
    config.methods = parse_methods(a.methods);
    config.runs = a.runs;
    config.seed = a.seed;
    config.reference_samples = a.reference_samples;
    config.target = a.target == "marginal" ? BoltzmannTarget::marginal : BoltzmannTarget::partition;
    return benchmark_table("boltzmann", run_boltzmann(config).rows, "reference");
}

struct KernelArgs {
    std::string kernel = "gaussian";
    double sigma = 15.0;
    std::size_t d = 10;
    std::uint64_t n = 1021;
    std::size_t samples = 2000;
    std::vector<std::string> methods{"subgroup", "mc"};
    std::size_t runs = 50;
    std::uint64_t seed = 0;
    std::string data;
    // features only
    std::size_t run = 0;
    bool no_shift = false;
    std::string gram_output;
};

KernelConfig kernel_config(const KernelArgs& a, const CLI::App& cmd)
{
    require(a.sigma > 0.0 && std::isfinite(a.sigma), "--sigma must be positive");
    require(a.samples >= 1, "--samples must be at least 1");
    require(a.runs >= 1, "--runs must be at least 1");
    KernelConfig config;
    config.spec = {parse_kernel_family(a.kernel), a.sigma};
    config.d = a.d;
    config.n = a.n;
    config.samples = a.samples;
    config.methods = parse_methods(a.methods);
    config.runs = a.runs;
    config.seed = a.seed;
    if (!a.data.empty()) {
        auto data = read_csv_matrix_file(a.data);
        require(data.rows() >= 1 && data.cols() >= 1, "--data file has no rows");
        require(cmd.count("--d") == 0 || static_cast<std::size_t>(data.cols()) == a.d,
                "--d does not match the number of columns in --data");
        config.d = static_cast<std::size_t>(data.cols());
        config.data = std::move(data);
    }
    require(config.d >= 1, "--d must be at least 1");
    admissible_prime(config.n);
    return config;
}

Table kernel(const KernelArgs& a, const CLI::App& cmd)
{
    const auto rows = run_kernel(kernel_config(a, cmd));
    Table table{"kernel", {"method", "kernel", "d", "n", "seed", "run", "rel_frobenius", "rel_max"}, {}, {}};
    for (const auto& r : rows)
        table.rows.push_back({r.method, r.kernel, std::uint64_t{r.d}, r.n, r.seed, std::uint64_t{r.run},
                              r.rel_frobenius, r.rel_max});
    add_summary(table, 5, {6, 7});
    return table;
}

void features(const KernelArgs& a, const CLI::App& cmd, const Globals& g, std::ostream& fallback)
{
    require(a.methods.size() == 1, "features takes a single --method");
    require(g.format == "csv", "features writes CSV only");
    const auto config = kernel_config(a, cmd);
    const PointFactory factory(config.methods.front(), config.d, config.n, config.seed, !a.no_shift);
    const auto data = kernel_data(config, a.run);
    const auto phi = feature_map(data, factory.points(a.run), config.spec);

    Sink sink(g.output, fallback);
    write_matrix_header(sink.stream(), g.options());
    write_csv_matrix(sink.stream(), phi.features);
    if (!a.gram_output.empty()) {
        Sink gram(a.gram_output, fallback);
        write_matrix_header(gram.stream(), g.options());
        write_csv_matrix(gram.stream(), approx_gram(phi));
    }
}

struct SphereArgs {
    std::size_t d = 50;
    std::uint64_t n = 101;
    bool verify = false;
    std::string frame_output;
};

Table sphere(const SphereArgs& a, const Globals& g, std::ostream& fallback)
{
    require(a.d >= 2 && a.d % 2 == 0, "--d must be even and at least 2");
    const auto row = run_sphere(a.d, admissible_prime(a.n).value(), a.verify);
    if (!a.frame_output.empty()) {
        Sink frame(a.frame_output, fallback);
        write_matrix_header(frame.stream(), g.options());
        write_frame_csv(frame.stream(), sphere_frame(a.d / 2, PrimeModulus(a.n)));
    }
    return {"sphere",
            {"d", "m", "n", "points", "mu", "bound_t3", "bound_holds", "bound_t4", "t4_applicable", "pairwise_mu"},
            {{std::uint64_t{row.d}, std::uint64_t{row.m}, row.n, std::uint64_t{row.points}, row.mu, row.bound_t3,
              row.bound_holds, row.bound_t4, row.t4_applicable,
              row.pairwise_mu ? Cell{*row.pairwise_mu} : Cell{}}},
            {}};
}

struct TimingArgs {
    std::size_t d = 500;
    std::uint64_t n = 3001;
    std::string norm = "l2";
};

Table bench_timing(const TimingArgs& a)
{
    require(a.d >= 1, "--d must be at least 1");
    admissible_prime(a.n);
    if (!is_admissible(a.d, a.n))
        subgroup_generating_vector(a.d, a.n); // throws with the failed condition
    Table table{"bench-timing", {"method", "d", "n", "seconds", "score"}, {}, {}};
    for (const auto& r : run_timing(a.d, a.n, parse_norm(a.norm)))
        table.rows.push_back({r.method, std::uint64_t{r.d}, r.n, r.seconds, r.score});
    return table;
}

struct PointsArgs {
    std::size_t d = 0;
    std::uint64_t n = 0;
    std::string method = "subgroup";
    std::uint64_t seed = 0;
    std::size_t run = 0;
    bool no_shift = false;
    std::string norm = "l2";
};

void points(const PointsArgs& a, const Globals& g, std::ostream& fallback)
{
    require(a.d >= 1 && a.n >= 1, "--d and --n must be at least 1");
    require(g.format == "csv", "points writes CSV only");
    const auto method = parse_method(a.method);
    if (method == Method::korobov)
        admissible_prime(a.n);
    const PointFactory factory(method, a.d, a.n, a.seed, !a.no_shift, parse_norm(a.norm));
    const auto ps = factory.points(a.run);
    Sink sink(g.output, fallback);
    write_matrix_header(sink.stream(), g.options());
    write_points_csv(sink.stream(), ps);
}

const std::vector<std::string> method_names{"subgroup", "korobov", "mc"};
const std::vector<std::string> norm_names{"l1", "l2"};

void add_global_options(CLI::App& app, Globals& g)
{
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", g.output, "Write results to this file instead of stdout");
    app.add_flag("--deterministic", g.deterministic, "Omit the timestamp line");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rank-1 lattice construction, evaluation and QMC experiments", "lattice-forge"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    add_global_options(app, g);

    std::function<void()> action;
    auto emit = [&](const Table& table) {
        Sink sink(g.output, out);
        write_table(sink.stream(), table, g.options());
    };

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build a generating vector and report its distances");
    construct_cmd->add_option("--d", ca.d, "Dimension")->required();
    construct_cmd->add_option("--n", ca.n, "Number of points (prime)")->required();
    construct_cmd->add_option("--method", ca.method)->check(CLI::IsMember({"subgroup", "korobov", "explicit"}));
    construct_cmd->add_option("--z", ca.z, "Components for --method explicit")->delimiter(',');
    construct_cmd->add_option("--norm", ca.norm, "Norm maximized by the Korobov search")->check(CLI::IsMember(norm_names));
    construct_cmd->callback([&] { action = [&] { emit(construct(ca)); }; });

    AdmissibleArgs aa;
    auto* admissible_cmd = app.add_subcommand("admissible", "List primes n with 2d | n-1");
    admissible_cmd->add_option("--d", aa.d)->required();
    admissible_cmd->add_option("--count", aa.count);
    admissible_cmd->add_option("--start", aa.start, "Smallest candidate n");
    admissible_cmd->callback([&] { action = [&] { emit(admissible(aa)); }; });

    IntegrateArgs ia;
    auto* integrate_cmd = app.add_subcommand("integrate", "Integration benchmark on the test integrand");
    integrate_cmd->add_option("--d", ia.d);
    integrate_cmd->add_option("--n", ia.n);
    integrate_cmd->add_option("--b", ia.b);
    integrate_cmd->add_option("--c", ia.c);
    integrate_cmd->add_option("--method", ia.methods)->delimiter(',')->check(CLI::IsMember(method_names));
    integrate_cmd->add_option("--runs", ia.runs);
    integrate_cmd->add_option("--seed", ia.seed);
    integrate_cmd->add_flag("--no-shift", ia.no_shift, "Use the unshifted lattice in every run");
    integrate_cmd->callback([&] { action = [&] { emit(integrate(ia)); }; });

    BoltzmannArgs ba;
    auto* boltzmann_cmd = app.add_subcommand("boltzmann", "Partition function / marginal benchmark");
    boltzmann_cmd->add_option("--d", ba.d);
    boltzmann_cmd->add_option("--n", ba.n);
    boltzmann_cmd->add_option("--method", ba.methods)->delimiter(',')->check(CLI::IsMember(method_names));
    boltzmann_cmd->add_option("--runs", ba.runs);
    boltzmann_cmd->add_option("--seed", ba.seed);
    boltzmann_cmd->add_option("--reference-samples", ba.reference_samples);
    boltzmann_cmd->add_option("--target", ba.target)->check(CLI::IsMember({"partition", "marginal"}));
    boltzmann_cmd->callback([&] { action = [&] { emit(boltzmann(ba)); }; });

    KernelArgs ka;
    auto add_kernel_options = [&](CLI::App* cmd) {
        cmd->add_option("--kernel", ka.kernel)->check(CLI::IsMember({"gaussian", "arccos0", "arccos1"}));
        cmd->add_option("--sigma", ka.sigma, "Gaussian bandwidth");
        cmd->add_option("--d", ka.d);
        cmd->add_option("--n", ka.n, "Number of frequencies");
        cmd->add_option("--samples", ka.samples);
        cmd->add_option("--seed", ka.seed);
        cmd->add_option("--data", ka.data, "CSV file of input rows");
    };
    auto* kernel_cmd = app.add_subcommand("kernel", "Gram matrix approximation benchmark");
    add_kernel_options(kernel_cmd);
    kernel_cmd->add_option("--method", ka.methods)->delimiter(',')->check(CLI::IsMember(method_names));
    kernel_cmd->add_option("--runs", ka.runs);
    kernel_cmd->callback([&] { action = [&] { emit(kernel(ka, *kernel_cmd)); }; });

    auto* features_cmd = app.add_subcommand("features", "Write the feature matrix of one run");
    add_kernel_options(features_cmd);
    features_cmd->add_option("--method", ka.methods)->delimiter(',')->check(CLI::IsMember(method_names));
    features_cmd->add_option("--run", ka.run);
    features_cmd->add_flag("--no-shift", ka.no_shift);
    features_cmd->add_option("--gram-output", ka.gram_output, "Also write the approximate Gram matrix");
    features_cmd->callback([&] {
        if (features_cmd->count("--method") == 0)
            ka.methods = {"subgroup"};
        action = [&] { features(ka, *features_cmd, g, out); };
    });

    SphereArgs sa;
    auto* sphere_cmd = app.add_subcommand("sphere", "Mutual coherence of the spherical frame");
    sphere_cmd->add_option("--d", sa.d, "Ambient dimension 2m");
    sphere_cmd->add_option("--n", sa.n);
    sphere_cmd->add_flag("--verify", sa.verify, "Also compute the pairwise coherence");
    sphere_cmd->add_option("--frame-output", sa.frame_output, "Write the frame matrix as CSV");
    sphere_cmd->callback([&] { action = [&] { emit(sphere(sa, g, out)); }; });

    TimingArgs ta;
    auto* timing_cmd = app.add_subcommand("bench-timing", "Subgroup construction vs Korobov search time");
    timing_cmd->add_option("--d", ta.d);
    timing_cmd->add_option("--n", ta.n);
    timing_cmd->add_option("--norm", ta.norm)->check(CLI::IsMember(norm_names));
    timing_cmd->callback([&] { action = [&] { emit(bench_timing(ta)); }; });

    PointsArgs pa;
    auto* points_cmd = app.add_subcommand("points", "Write the point set of one run as CSV");
    points_cmd->add_option("--d", pa.d)->required();
    points_cmd->add_option("--n", pa.n)->required();
    points_cmd->add_option("--method", pa.method)->check(CLI::IsMember(method_names));
    points_cmd->add_option("--seed", pa.seed);
    points_cmd->add_option("--run", pa.run);
    points_cmd->add_flag("--no-shift", pa.no_shift);
    points_cmd->add_option("--norm", pa.norm, "Norm maximized by the Korobov search")->check(CLI::IsMember(norm_names));
    points_cmd->callback([&] { action = [&] { points(pa, g, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        action();
        return exit_code::ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const AdmissibilityError& e) {
        err << "admissibility error: " << e.what() << '\n';
        return exit_code::admissibility;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_code::domain;
    } catch (const std::exception& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_code::domain;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"lattice-forge"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace lattice_forge::cli
