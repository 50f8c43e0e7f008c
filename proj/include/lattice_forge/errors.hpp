#pragma once

#include <stdexcept>
#include <string>

namespace lattice_forge {

// A numeric argument lies outside the domain of the operation
// (composite modulus, zero vector for an angular kernel, c = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// (d, n) or (m, n) violate the divisibility/size conditions a
// construction needs, e.g. 2d does not divide n - 1.
class AdmissibilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The caller asked for something the operation refuses to do: a quadratic
// oracle beyond its size guard, or an unshifted lattice fed to the inverse CDF.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lattice_forge
