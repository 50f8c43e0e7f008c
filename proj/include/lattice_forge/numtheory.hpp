#pragma once

#include <cstdint>
#include <vector>

namespace lattice_forge {

/// Deterministic Miller-Rabin; the witness set {2, 3, 5, 7, 11, 13, 17, 19,
/// 23, 29, 31, 37} is complete for every 64-bit input.
bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    unsigned multiplicity;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::uint64_t base = 0;
    std::vector<PrimePower> factors; // strictly increasing primes

    /// Product of prime^multiplicity; equals base for a valid factorization.
    std::uint64_t recombine() const;
};

/// Trial division. Throws DomainError for n < 2.
Factorization factorize(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// base^exp mod n by square-and-multiply with 128-bit intermediates.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// A modulus known to be prime. Construction runs the primality check once,
/// so any function taking a PrimeModulus can rely on primality.
class PrimeModulus {
public:
    /// Throws DomainError if n is not prime.
    explicit PrimeModulus(std::uint64_t n);

    std::uint64_t value() const { return n_; }
    operator std::uint64_t() const { return n_; }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t n_;
};

/// Smallest primitive root of p (1 for p = 2).
std::uint64_t primitive_root(PrimeModulus p);

} // namespace lattice_forge
