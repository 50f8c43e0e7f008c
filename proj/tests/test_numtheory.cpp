#include "oracles.hpp"

#include "lattice_forge/errors.hpp"
#include "lattice_forge/numtheory.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace lattice_forge;

TEST_CASE("is_prime agrees with trial division below 50000")
{
    for (std::uint64_t n = 0; n < 50000; ++n)
        REQUIRE(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("is_prime on 64-bit primes and strong pseudoprimes")
{
    CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to bases up to 23
    CHECK_FALSE(is_prime(4294967297ULL));          // 641 * 6700417
}

TEST_CASE("factorize recombines and lists increasing primes")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t n = 2 + rng() % 10'000'000;
        const auto f = factorize(n);
        REQUIRE(f.base == n);
        REQUIRE(f.recombine() == n);
        for (std::size_t j = 0; j < f.factors.size(); ++j) {
            REQUIRE(oracle::is_prime(f.factors[j].prime));
            REQUIRE(f.factors[j].multiplicity >= 1);
            if (j > 0)
                REQUIRE(f.factors[j - 1].prime < f.factors[j].prime);
        }
    }
    CHECK(factorize(360).factors == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(101).factors == std::vector<PrimePower>{{101, 1}});
    CHECK_THROWS_AS(factorize(1), DomainError);
    CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("mod_pow and mul_mod")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = 2 + rng() % 5000;
        const std::uint64_t a = rng() % 100000;
        const std::uint64_t e = rng() % 300;
        REQUIRE(mod_pow(a, e, n) == oracle::pow_mod(a % n, e, n));
    }
    const std::uint64_t big = 18446744073709551557ULL;
    const std::uint64_t a = big - 2, b = big - 3;
    const auto expect = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % big);
    CHECK(mul_mod(a, b, big) == expect);
    CHECK(mod_pow(3, big - 1, big) == 1); // Fermat
    CHECK(mod_pow(5, 0, 7) == 1);
    CHECK(mod_pow(5, 3, 1) == 0);
}

TEST_CASE("primitive_root is the smallest generator")
{
    for (std::uint64_t p = 3; p < 3000; ++p) {
        if (!oracle::is_prime(p))
            continue;
        REQUIRE(primitive_root(PrimeModulus(p)) == oracle::primitive_root(p));
    }
    CHECK(primitive_root(PrimeModulus(2)) == 1);
    CHECK(primitive_root(PrimeModulus(101)) == 2);
    CHECK(primitive_root(PrimeModulus(401)) == 3);
    CHECK(primitive_root(PrimeModulus(41)) == 6);
    CHECK(primitive_root(PrimeModulus(3001)) == 14);
}

TEST_CASE("primitive_root of a large prime has full order")
{
    const PrimeModulus p(1'000'000'007ULL);
    const auto g = primitive_root(p);
    for (const auto& f : factorize(p - 1).factors)
        REQUIRE(mod_pow(g, (p - 1) / f.prime, p) != 1);
}

TEST_CASE("PrimeModulus rejects composites")
{
    CHECK_THROWS_AS(PrimeModulus(12), DomainError);
    CHECK_THROWS_AS(PrimeModulus(1), DomainError);
    CHECK_THROWS_AS(PrimeModulus(0), DomainError);
    CHECK(PrimeModulus(13).value() == 13);
}
