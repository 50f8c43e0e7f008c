#include "lattice_forge/metrics.hpp"

#include "lattice_forge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lattice_forge {

namespace {

using u128 = unsigned __int128;

// Only k in [1, (n-1)/2] needs scanning: x_{n-k} = -x_k has the same norm.
std::uint64_t half_range(std::uint64_t n) { return n == 2 ? 1 : (n - 1) / 2; }

std::uint64_t mirror_factor(std::uint64_t n) { return n == 2 ? 1 : 2; }

void check_key_range(const GeneratingVector& z, Norm norm)
{
    const u128 half = z.modulus() / 2;
    const u128 per_coord = norm == Norm::l1 ? half : half * half;
    if (per_coord * z.dimension() > std::numeric_limits<std::uint64_t>::max())
        throw DomainError("distance keys overflow 64 bits for d=" + std::to_string(z.dimension()) +
                          ", n=" + std::to_string(z.modulus()));
}

// Walks k = 1, 2, ... keeping r_j = k z_j mod n incrementally, calling
// visit(k, key) per k until it returns false.
template <class Visit>
void scan_keys(const GeneratingVector& z, Norm norm, Visit&& visit)
{
    const std::uint64_t n = z.modulus();
    const auto zs = z.components();
    std::vector<std::uint64_t> residue(zs.size(), 0);
    const std::uint64_t last = half_range(n);
    for (std::uint64_t k = 1; k <= last; ++k) {
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < zs.size(); ++j) {
            std::uint64_t r = residue[j] + zs[j];
            if (r >= n)
                r -= n;
            residue[j] = r;
            const std::uint64_t m = std::min(r, n - r);
            key += norm == Norm::l1 ? m : m * m;
        }
        if (!visit(k, key))
            return;
    }
}

} // namespace

std::string_view to_string(Norm norm) { return norm == Norm::l1 ? "l1" : "l2"; }

Norm parse_norm(std::string_view text)
{
    if (text == "l1" || text == "T1" || text == "1")
        return Norm::l1;
    if (text == "l2" || text == "T2" || text == "2")
        return Norm::l2;
    throw DomainError("unknown norm '" + std::string(text) + "' (expected l1 or l2)");
}

double toroidal_distance(std::span<const double> x, std::span<const double> y, Norm norm)
{
    if (x.size() != y.size())
        throw DomainError("toroidal_distance: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0 && x[i] <= 1.0 && y[i] >= 0.0 && y[i] <= 1.0))
            throw DomainError("toroidal_distance: coordinate outside [0,1]");
        const double delta = std::abs(x[i] - y[i]);
        const double wrapped = std::min(delta, 1.0 - delta);
        acc += norm == Norm::l1 ? wrapped : wrapped * wrapped;
    }
    return norm == Norm::l1 ? acc : std::sqrt(acc);
}

double key_to_distance(std::uint64_t key, std::uint64_t n, Norm norm)
{
    const double scale = static_cast<double>(n);
    return norm == Norm::l1 ? static_cast<double>(key) / scale : std::sqrt(static_cast<double>(key)) / scale;
}

DistanceReport lattice_min_distance(const GeneratingVector& z, Norm norm)
{
    check_key_range(z, norm);
    const std::uint64_t n = z.modulus();

    std::vector<std::uint64_t> keys;
    keys.reserve(half_range(n));
    DistanceReport report;
    report.norm = norm;
    report.min_key = std::numeric_limits<std::uint64_t>::max();
    scan_keys(z, norm, [&](std::uint64_t k, std::uint64_t key) {
        keys.push_back(key);
        if (key < report.min_key) {
            report.min_key = key;
            report.argmin_k = k;
        }
        return true;
    });

    std::sort(keys.begin(), keys.end());
    const std::uint64_t mirror = mirror_factor(n);
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i])
            ++j;
        report.census.push_back({keys[i], key_to_distance(keys[i], n, norm), mirror * (j - i)});
        i = j;
    }
    report.min_distance = key_to_distance(report.min_key, n, norm);
    return report;
}

std::uint64_t lattice_min_key(const GeneratingVector& z, Norm norm, std::uint64_t stop_below)
{
    check_key_range(z, norm);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    scan_keys(z, norm, [&](std::uint64_t, std::uint64_t key) {
        best = std::min(best, key);
        return best >= stop_below;
    });
    return best;
}

TheoremBounds theorem2_bounds(std::size_t d, PrimeModulus n)
{
    const double nn = static_cast<double>(n.value());
    if (n.value() < 2 * static_cast<std::uint64_t>(d) + 1)
        throw AdmissibilityError("theorem2_bounds: n=" + std::to_string(n.value()) + " is below 2d+1=" +
                                 std::to_string(2 * d + 1));
    const double dd = static_cast<double>(d);
    return {
        dd * (dd + 1.0) / (2.0 * nn),
        (nn + 1.0) * dd / (4.0 * nn),
        std::sqrt(6.0 * dd * (dd + 1.0) * (2.0 * dd + 1.0)) / (6.0 * nn),
        std::sqrt((nn + 1.0) * dd / (12.0 * nn)),
    };
}

BoundCheck check_bounds_exact(std::uint64_t min_key, std::size_t d, std::uint64_t n, Norm norm)
{
    const u128 key = min_key;
    const u128 dd = d;
    const u128 nn = n;
    if (norm == Norm::l1)
        return {dd * (dd + 1) <= 2 * key, 4 * key <= (nn + 1) * dd};
    return {dd * (dd + 1) * (2 * dd + 1) <= 6 * key, 12 * key <= (nn + 1) * dd * nn};
}

Corollary1Values corollary1_values(std::size_t d)
{
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(d) + 1;
    if (d == 0 || !is_prime(n))
        throw AdmissibilityError("corollary1_values: 2d+1=" + std::to_string(n) + " is not prime");
    const double nn = static_cast<double>(n);
    const double dd = static_cast<double>(d);
    return {(nn + 1.0) * dd / (4.0 * nn), std::sqrt((nn + 1.0) * dd / (12.0 * nn)), PrimeModulus(n)};
}

double brute_force_min_distance(const LatticePointSet& points, Norm norm)
{
    const std::size_t count = points.size();
    if (count > brute_force_point_limit)
        throw PreconditionError("brute_force_min_distance: " + std::to_string(count) +
                                " points exceeds the limit of " + std::to_string(brute_force_point_limit));
    if (count < 2)
        throw PreconditionError("brute_force_min_distance: need at least two points");

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            best = std::min(best, toroidal_distance(points.point(i), points.point(j), norm));
    return best;
}

} // namespace lattice_forge
