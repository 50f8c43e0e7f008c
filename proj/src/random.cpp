#include "lattice_forge/random.hpp"

namespace lattice_forge {

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t run)
{
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32U); };
    std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(run), hi(run)};
    return Rng(seq);
}

double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

double standard_normal(Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    return normal(rng);
}

} // namespace lattice_forge

namespace lattice_forge {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t run)
{
    auto rng = make_rng(seed, stream, run);
    return rng();
}

} // namespace lattice_forge
