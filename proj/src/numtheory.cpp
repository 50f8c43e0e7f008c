#include "lattice_forge/numtheory.hpp"

#include "lattice_forge/errors.hpp"

#include <array>
#include <string>

namespace lattice_forge {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t n)
{
    if (n == 1)
        return 0;
    std::uint64_t result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1U)
            result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : witnesses) {
        if (n % p == 0)
            return n == p;
    }

    std::uint64_t odd = n - 1;
    unsigned twos = 0;
    while ((odd & 1U) == 0) {
        odd >>= 1U;
        ++twos;
    }

    for (auto a : witnesses) {
        std::uint64_t x = mod_pow(a, odd, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < twos; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t Factorization::recombine() const
{
    std::uint64_t value = 1;
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i)
            value *= f.prime;
    return value;
}

Factorization factorize(std::uint64_t n)
{
    if (n < 2)
        throw DomainError("factorize: n must be at least 2, got " + std::to_string(n));

    Factorization result{n, {}};
    std::uint64_t rest = n;
    auto take = [&](std::uint64_t p) {
        unsigned count = 0;
        while (rest % p == 0) {
            rest /= p;
            ++count;
        }
        if (count > 0)
            result.factors.push_back({p, count});
    };

    take(2);
    for (std::uint64_t p = 3; p <= rest / p; p += 2)
        take(p);
    if (rest > 1)
        result.factors.push_back({rest, 1});
    return result;
}

PrimeModulus::PrimeModulus(std::uint64_t n) : n_(n)
{
    if (!is_prime(n))
        throw DomainError(std::to_string(n) + " is not prime");
}

std::uint64_t primitive_root(PrimeModulus p)
{
    const std::uint64_t n = p.value();
    if (n == 2)
        return 1;

    const auto order = factorize(n - 1);
    for (std::uint64_t g = 2; g < n; ++g) {
        bool generates = true;
        for (const auto& f : order.factors) {
            if (mod_pow(g, (n - 1) / f.prime, n) == 1) {
                generates = false;
                break;
            }
        }
        if (generates)
            return g;
    }
    // Every prime has a primitive root; unreachable for a certified prime.
    throw DomainError("no primitive root found for " + std::to_string(n));
}

} // namespace lattice_forge
