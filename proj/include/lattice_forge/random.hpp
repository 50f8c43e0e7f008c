#pragma once

#include <cstdint>
#include <random>

namespace lattice_forge {

// Every random draw in the library comes from std::mt19937_64 seeded through
// std::seed_seq{seed, stream, run}. Uniforms use the top 53 bits of one
// output, so they lie in [0, 1) and never equal 1.
using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t run = 0);

double uniform01(Rng& rng);

double standard_normal(Rng& rng);

// Stream identifiers keep draws for different purposes independent.
namespace streams {
inline constexpr std::uint64_t shift = 1;
inline constexpr std::uint64_t monte_carlo = 2;
inline constexpr std::uint64_t model = 3;
inline constexpr std::uint64_t ground_truth = 4;
inline constexpr std::uint64_t data = 5;
inline constexpr std::uint64_t observation = 6;
} // namespace streams

} // namespace lattice_forge

namespace lattice_forge {

/// Independent 64-bit seed for (seed, stream, run).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t run);

} // namespace lattice_forge
