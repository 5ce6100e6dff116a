#pragma once

#include <cstdint>
#include <random>

namespace pairblock {

using rng_t = std::mt19937_64;

/// Uniform draw from [0, bound) by rejection; unlike
/// std::uniform_int_distribution the sequence is identical on every
/// standard library.
inline std::uint64_t
uniform_below(rng_t& rng, std::uint64_t bound)
{
        if (bound <= 1)
                return 0;
        const std::uint64_t limit = rng_t::max() - rng_t::max() % bound;
        for (;;) {
                std::uint64_t x = rng();
                if (x < limit)
                        return x % bound;
        }
}

/// splitmix64 finalizer; derives independent per-stream seeds.
inline std::uint64_t
derive_seed(std::uint64_t master, std::uint64_t stream)
{
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
}

} // namespace pairblock
