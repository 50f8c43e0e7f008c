#include "lattice_forge/generating_vector.hpp"

#include "lattice_forge/errors.hpp"

#include <string>

namespace lattice_forge {

std::string_view to_string(Construction c)
{
    switch (c) {
    case Construction::subgroup:
        return "subgroup";
    case Construction::korobov:
        return "korobov";
    case Construction::explicit_vector:
        break;
    }
    return "explicit";
}

GeneratingVector::GeneratingVector(std::vector<std::uint64_t> z, PrimeModulus n, Construction method)
    : z_(std::move(z)), n_(n), method_(method)
{
    if (z_.empty())
        throw DomainError("generating vector must have at least one component");
    for (auto c : z_) {
        if (c < 1 || c >= n_.value())
            throw DomainError("generating vector component " + std::to_string(c) + " outside [1, " +
                              std::to_string(n_.value() - 1) + "]");
    }
}

} // namespace lattice_forge
