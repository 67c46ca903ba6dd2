#pragma once

#include <cstdint>
#include <random>

namespace woi {

inline std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seeded random stream. Uniform draws are generated from raw engine output
// rather than std::uniform_*_distribution so that identical seeds give
// identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform01()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi)
    {
        return lo + uniform01() * (hi - lo);
    }

    // Uniform integer in [0, n).
    std::size_t uniform_index(std::size_t n)
    {
        return static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    }

    bool coin_flip() { return uniform01() < 0.5; }

private:
    std::mt19937_64 engine_;
};

// Independent sub-stream for worker `index` of a run seeded with `master`.
inline Rng derive_stream(std::uint64_t master, std::uint64_t index)
{
    return Rng(splitmix64(master ^ splitmix64(index + 1)));
}

} // namespace woi
