#include "lattice_forge/pointset.hpp"

#include "lattice_forge/csv.hpp"
#include "lattice_forge/errors.hpp"
#include "lattice_forge/random.hpp"

#include <ostream>

namespace lattice_forge {

LatticePointSet generate(const GeneratingVector& z)
{
    const std::uint64_t n = z.modulus();
    const std::size_t d = z.dimension();
    const double scale = static_cast<double>(n);

    LatticePointSet ps;
    ps.points.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    std::vector<std::uint64_t> residue(d, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        double* row = ps.points.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) {
            row[j] = static_cast<double>(residue[j]) / scale;
            residue[j] += z[j];
            if (residue[j] >= n)
                residue[j] -= n;
        }
    }
    ps.generator = z;
    return ps;
}

LatticePointSet shift_by(const LatticePointSet& ps, std::span<const double> delta)
{
    const std::size_t d = ps.dimension();
    if (delta.size() != d)
        throw DomainError("shift dimension does not match the point set");
    for (double v : delta)
        if (!(v >= 0.0 && v < 1.0))
            throw DomainError("shift components must lie in [0,1)");

    LatticePointSet out = ps;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        double* row = out.points.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) {
            // Both terms are in [0,1), so one subtraction reduces mod 1 and is exact.
            const double sum = row[j] + delta[j];
            row[j] = sum >= 1.0 ? sum - 1.0 : sum;
        }
    }
    out.shift = std::vector<double>(delta.begin(), delta.end());
    return out;
}

LatticePointSet random_shift(const LatticePointSet& ps, std::uint64_t seed)
{
    auto rng = make_rng(seed, streams::shift);
    std::vector<double> delta(ps.dimension());
    for (auto& v : delta)
        v = uniform01(rng);
    auto out = shift_by(ps, delta);
    out.seed = seed;
    return out;
}

LatticePointSet mc_points(std::size_t n, std::size_t d, std::uint64_t seed)
{
    if (n == 0 || d == 0)
        throw DomainError("mc_points needs n >= 1 and d >= 1");
    auto rng = make_rng(seed, streams::monte_carlo);
    LatticePointSet ps;
    ps.points.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < ps.points.size(); ++i)
        ps.points.data()[i] = uniform01(rng);
    ps.seed = seed;
    return ps;
}

void write_points_csv(std::ostream& out, const LatticePointSet& ps)
{
    write_csv_matrix(out, ps.points);
}

} // namespace lattice_forge
