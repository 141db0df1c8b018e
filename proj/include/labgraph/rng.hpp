#pragma once

#include <cmath>
#include <cstdint>

namespace labgraph {

// Deterministic, platform-independent RNG. splitmix64 is used both as the
// stream generator and to derive independent substreams, so results do not
// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller (always consumes two draws).
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Derive an independent substream from a parent seed and stream labels.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                std::uint64_t c = 0) {
        Rng mix(seed ^ (a * 0x9e3779b97f4a7c15ULL));
        mix.state_ ^= b * 0xd1342543de82ef95ULL;
        mix.state_ ^= c * 0xaf251af3b0f025b5ULL;
        mix.next_u64();
        return mix.next_u64();
    }

private:
    std::uint64_t state_;
};

} // namespace labgraph
