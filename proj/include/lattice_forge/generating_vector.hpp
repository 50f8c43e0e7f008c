#pragma once

#include "lattice_forge/numtheory.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lattice_forge {

enum class Construction { subgroup, korobov, explicit_vector };

std::string_view to_string(Construction c);

/// Integer vector z with modulus n. Components are residues in [1, n - 1].
class GeneratingVector {
public:
    /// Throws DomainError for an empty vector or a component outside [1, n - 1].
    GeneratingVector(std::vector<std::uint64_t> z, PrimeModulus n,
                     Construction method = Construction::explicit_vector);

    std::span<const std::uint64_t> components() const { return z_; }
    std::uint64_t operator[](std::size_t j) const { return z_[j]; }
    std::uint64_t modulus() const { return n_.value(); }
    PrimeModulus prime_modulus() const { return n_; }
    std::size_t dimension() const { return z_.size(); }
    Construction method() const { return method_; }

    friend bool operator==(const GeneratingVector&, const GeneratingVector&) = default;

private:
    std::vector<std::uint64_t> z_;
    PrimeModulus n_;
    Construction method_;
};

} // namespace lattice_forge
