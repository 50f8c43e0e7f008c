#include "lattice_forge/lattice.hpp"

#include "lattice_forge/errors.hpp"
#include "lattice_forge/parallel.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace lattice_forge {

namespace {

void require_subgroup_shape(std::size_t d, std::uint64_t n)
{
    if (d == 0)
        throw AdmissibilityError("dimension must be positive");
    const std::uint64_t two_d = 2 * static_cast<std::uint64_t>(d);
    if (n < two_d + 1)
        throw AdmissibilityError("n=" + std::to_string(n) + " is below 2d+1=" + std::to_string(two_d + 1));
    if ((n - 1) % two_d != 0)
        throw AdmissibilityError("2d does not divide n-1 (2d=" + std::to_string(two_d) +
                                 ", n-1=" + std::to_string(n - 1) + ")");
}

} // namespace

bool is_admissible(std::size_t d, std::uint64_t n)
{
    if (d == 0)
        return false;
    const std::uint64_t two_d = 2 * static_cast<std::uint64_t>(d);
    return n >= two_d + 1 && (n - 1) % two_d == 0 && is_prime(n);
}

GeneratingVector subgroup_generating_vector(std::size_t d, PrimeModulus n)
{
    require_subgroup_shape(d, n.value());
    const std::uint64_t step = (n.value() - 1) / (2 * static_cast<std::uint64_t>(d));
    const std::uint64_t g = primitive_root(n);
    const std::uint64_t gen = mod_pow(g, step, n);

    std::vector<std::uint64_t> z(d);
    std::uint64_t power = 1;
    for (auto& c : z) {
        c = power;
        power = mul_mod(power, gen, n);
    }
    return GeneratingVector(std::move(z), n, Construction::subgroup);
}

GeneratingVector subgroup_generating_vector(std::size_t d, std::uint64_t n)
{
    require_subgroup_shape(d, n);
    if (!is_prime(n))
        throw AdmissibilityError("n=" + std::to_string(n) + " is not prime");
    return subgroup_generating_vector(d, PrimeModulus(n));
}

GeneratingVector korobov_vector(std::uint64_t alpha, std::size_t d, PrimeModulus n)
{
    if (alpha < 1 || alpha >= n.value())
        throw DomainError("korobov multiplier " + std::to_string(alpha) + " outside [1, " +
                          std::to_string(n.value() - 1) + "]");
    if (d == 0)
        throw DomainError("dimension must be positive");
    std::vector<std::uint64_t> z(d);
    std::uint64_t power = 1;
    for (auto& c : z) {
        c = power;
        power = mul_mod(power, alpha, n);
    }
    return GeneratingVector(std::move(z), n, Construction::korobov);
}

SearchResult korobov_search(std::size_t d, PrimeModulus n, Norm norm)
{
    if (d == 0 || n.value() < 2 * static_cast<std::uint64_t>(d) + 1)
        throw AdmissibilityError("korobov_search requires n >= 2d+1");

    struct Best {
        std::uint64_t key = 0;
        std::uint64_t alpha = 0;
    };
    const std::uint64_t candidates = n.value() - 1;
    const std::size_t workers = worker_count();
    std::vector<Best> best(workers);

    parallel_blocks(candidates, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        Best local;
        for (std::size_t i = begin; i < end; ++i) {
            const std::uint64_t alpha = i + 1;
            // A candidate that falls strictly below the local best cannot win,
            // so its scan may stop early.
            const std::uint64_t key = lattice_min_key(korobov_vector(alpha, d, n), norm, local.key);
            if (local.alpha == 0 || key > local.key)
                local = {key, alpha};
        }
        best[w] = local;
    });

    Best winner;
    for (const auto& b : best) {
        if (b.alpha == 0)
            continue;
        if (winner.alpha == 0 || b.key > winner.key || (b.key == winner.key && b.alpha < winner.alpha))
            winner = b;
    }

    auto vector = korobov_vector(winner.alpha, d, n);
    return {vector, key_to_distance(winner.key, n.value(), norm), winner.alpha, candidates};
}

std::vector<PrimeModulus> find_admissible_n(std::size_t d, std::size_t count, std::uint64_t start)
{
    if (d == 0)
        throw AdmissibilityError("dimension must be positive");
    const std::uint64_t two_d = 2 * static_cast<std::uint64_t>(d);
    std::uint64_t n = std::max<std::uint64_t>(start, two_d + 1);
    // Advance to the first n with n = 1 (mod 2d), then step by 2d.
    n += (two_d - (n - 1) % two_d) % two_d;

    std::vector<PrimeModulus> found;
    found.reserve(count);
    for (; found.size() < count; n += two_d)
        if (is_prime(n))
            found.emplace_back(n);
    return found;
}

bool is_degenerate(const GeneratingVector& z)
{
    std::unordered_set<std::uint64_t> seen;
    for (auto c : z.components())
        if (!seen.insert(c).second)
            return true;
    return false;
}

bool has_antipodal_pair(const GeneratingVector& z)
{
    const std::uint64_t n = z.modulus();
    std::unordered_set<std::uint64_t> seen;
    for (auto c : z.components()) {
        if (seen.contains(n - c))
            return true;
        seen.insert(c);
    }
    return false;
}

} // namespace lattice_forge
